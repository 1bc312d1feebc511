#pragma once

// Direct quadrature of the group convolution (f ∗ k)(p) = ∫ f(q) k(q⁻¹·p) dq
// with f sampled on a grid and k evaluated in closed form.

#include "rumin/grid.hpp"
#include "rumin/kernel.hpp"

#include <vector>

namespace rumin {

struct ConvolutionStats {
  std::size_t singular_cells = 0;  // q = p handled by the one-cell ball estimate
  std::size_t excluded_cells = 0;  // q = p dropped (principal value)
};

std::vector<double> convolve_at(const Grid& f, const HomogeneousKernel& k, const std::vector<RealPoint>& points,
                                Execution ex = Execution::parallel, ConvolutionStats* stats = nullptr);

// Output on the nodes of f's grid.
Grid group_convolve(const Grid& f, const HomogeneousKernel& k, Execution ex = Execution::parallel,
                    ConvolutionStats* stats = nullptr);

}  // namespace rumin
