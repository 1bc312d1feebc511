#pragma once

// Node-centred anisotropic grids on H^n: horizontal axes span [−L, L], the t axis
// spans [−L², L²], so δ_λ maps the grid of half-width L onto the one of half-width λL.

#include "rumin/group.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace rumin {

enum class Execution { serial, parallel };

struct GridSpec {
  int n = 1;
  double half_width = 1;
  int resolution = 33;    // nodes per horizontal axis, odd
  int t_resolution = 33;  // nodes on the t axis, odd

  int dims() const { return 2 * n + 1; }
  int nodes(int axis) const { return axis == 2 * n ? t_resolution : resolution; }
  double lower(int axis) const { return axis == 2 * n ? -half_width * half_width : -half_width; }
  double spacing(int axis) const { return -2 * lower(axis) / (nodes(axis) - 1); }
  std::size_t size() const;
  // δ_s applied to the grid: half-width s·L, same node counts.
  GridSpec dilated(double s) const;
  void validate() const;
};

class Grid {
 public:
  Grid() = default;
  explicit Grid(const GridSpec& spec);

  const GridSpec& spec() const { return spec_; }
  std::size_t size() const { return values_.size(); }
  double& operator[](std::size_t i) { return values_[i]; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }

  // Layout: axis 0 slowest, the t axis contiguous.
  std::size_t stride(int axis) const { return strides_[axis]; }
  int index(std::size_t flat, int axis) const { return static_cast<int>(flat / strides_[axis] % spec_.nodes(axis)); }
  double coordinate(int axis, int i) const { return spec_.lower(axis) + i * spec_.spacing(axis); }
  void point(std::size_t flat, double* p) const;
  RealPoint point(std::size_t flat) const;
  // Composite Simpson weight (product over axes).
  double weight(std::size_t flat) const;
  const std::vector<double>& axis_weights(int axis) const { return weights_[axis]; }

  static Grid sample(const GridSpec& spec, const std::function<double(const double*)>& f);

 private:
  GridSpec spec_;
  std::vector<double> values_;
  std::vector<std::size_t> strides_;
  std::vector<std::vector<double>> weights_;
};

// Σ_i term(i) over [0, count) summed in fixed blocks, so serial and parallel
// runs give bit-identical results.
double deterministic_sum(std::size_t count, const std::function<double(std::size_t)>& term, Execution ex);

struct DerivativeResult {
  Grid values;
  std::size_t boundary_fallbacks = 0;  // one-sided stencils at the grid edge
  std::size_t extrapolations = 0;      // t-interpolation outside the axis
};

// W_field u for field in 0..2n (X_1..X_n, Y_1..Y_n, T). Horizontal fields use
// group steps p·(±h e_i), which move the t coordinate off the grid; values there
// come from cubic Lagrange interpolation along t.
DerivativeResult discrete_derivative(const Grid& u, int field, Execution ex = Execution::parallel);

// Same as discrete_derivative, restricted to horizontal fields 0..2n−1.
DerivativeResult discrete_horizontal_derivative(const Grid& u, int field, Execution ex = Execution::parallel);

// Optional region: nodes with ρ(c⁻¹ p) < r.
struct Region {
  RealPoint center;
  double radius = 0;  // <= 0 means the whole grid
  bool contains(const double* p) const;
};

// Σ w_i u_i with the Simpson weights.
double grid_integral(const Grid& u, Execution ex = Execution::parallel);

double lp_norm(const Grid& u, double p, const Region& region = {}, Execution ex = Execution::parallel);

// (Σ_i |g_i|²)^{1/2} pointwise, then the L^p norm.
double vector_lp_norm(const std::vector<Grid>& g, double p, const Region& region = {},
                      Execution ex = Execution::parallel);

struct SobolevNormReport {
  double value = 0;
  std::vector<std::vector<int>> multi_indices;  // W^I, PBW exponents of length 2n+1
  std::vector<double> component_norms;
  std::size_t boundary_fallbacks = 0;
};

// ‖u‖_p + Σ_{d(I)=m} ‖W^I u‖_p, m <= 2.
SobolevNormReport sobolev_norm(const Grid& u, int m, double p, const Region& region = {},
                               Execution ex = Execution::parallel);

// Multi-indices with d(I) = m in PBW order W_1^{i_1}..W_{2n}^{i_{2n}} T^{i_{2n+1}}.
std::vector<std::vector<int>> multi_indices_of_degree(int n, int m);

}  // namespace rumin
