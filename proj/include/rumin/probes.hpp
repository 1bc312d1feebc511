#pragma once

// Grid experiments: convergence of the discrete frame, kernel decay, the
// critical-exponent dilation probes, the sub-Laplacian candidate kernels and
// the convolution consistency checks.

#include "rumin/convolution.hpp"
#include "rumin/grid.hpp"
#include "rumin/kernel.hpp"
#include "rumin/polynomial.hpp"

#include <vector>

namespace rumin {

// cutoff_profile(ρ(p)/R): smooth, radial in the gauge, supported in B(e, R).
double gauge_bump(int n, double R, const double* p);

// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

struct ConvergenceReport {
  int n = 0;
  int field = 0;
  std::vector<int> resolutions;
  std::vector<double> spacings;
  std::vector<double> errors;  // max over the inner half of the box
  double observed_order = 0;
};

// Discrete W_field u against the symbolic derivation, over several resolutions.
ConvergenceReport derivative_convergence(const Polynomial& u, int n, int field, const std::vector<int>& resolutions,
                                         double half_width = 1, Execution ex = Execution::parallel);

struct DecayReport {
  int n = 0;
  double mu = 0;
  int resolution = 0;
  std::vector<double> radii;
  std::vector<double> values;
  double expected_slope = 0;
  double fitted_slope = 0;
  double relative_error = 0;
};

// |f ∗ ρ^{μ−Q}| along the ray δ_s p̂ (ρ(p̂) = 1), f a gauge bump filling the grid.
DecayReport decay_probe(int n, double mu, const GridSpec& grid, const std::vector<double>& radii,
                        Execution ex = Execution::parallel);

// 1/q = 1/p − α/Q; throws std::invalid_argument unless 0 < α < Q and 1 < p < Q/α.
double critical_exponent_q(int n, double alpha, double p);

struct DilationProbeReport {
  int n = 0;
  double p = 0;
  double q = 0;
  double control_q = 0;
  bool dilation_adapted = true;
  std::vector<double> lambdas;
  std::vector<double> ratios;
  std::vector<double> control_ratios;
  double spread = 0;             // max/min − 1 of ratios
  double control_drift = 0;      // max/min − 1 of control_ratios
  bool control_monotone = false;
  std::size_t boundary_fallbacks = 0;
  ConvolutionStats stats;
};

// ‖u_λ ∗ k‖_q / ‖u_λ‖_p with u_λ = u∘δ_λ and k = ρ^{α−Q}, at the critical q and
// at the off-critical control q_c = control_factor · q. With dilation_adapted the
// grid for λ is δ_{1/λ} of the base grid.
DilationProbeReport lp_lq_probe(int n, double alpha, double p, const std::vector<double>& lambdas,
                                const GridSpec& grid, bool dilation_adapted = true, double control_factor = 1.5,
                                Execution ex = Execution::parallel);

// ‖u_λ‖_q / ‖∇_H u_λ‖_p with 1/q = 1/p − 1/Q.
DilationProbeReport scalar_sobolev_check(int n, double p, const std::vector<double>& lambdas, const GridSpec& grid,
                                         bool dilation_adapted = true, double control_factor = 1.5,
                                         Execution ex = Execution::parallel);

// ‖u‖_q / ‖∇_H u‖_p on the grid; 0 for u = 0. Throws if u does not vanish on the
// grid boundary.
double sobolev_ratio(const Grid& u, double p, double q, Execution ex = Execution::parallel,
                     std::size_t* fallbacks = nullptr);

struct FundamentalReport {
  int n = 0;
  double t_weight = 0;
  std::vector<int> resolutions;
  std::vector<double> spacings;
  std::vector<double> residuals;  // ‖Σ W_j² F‖ / ‖Σ |W_j² F|‖ on the shell
  double observed_order = 0;
  bool harmonic = false;  // residuals decrease to 0 at order >= min_order
};

// Candidate F = (|z|^4 + c t^2)^{−n/2} under the discrete sub-Laplacian on the
// shell 1/2 < ρ < 3/4 of the unit grid. A harmonic candidate shows the residual
// shrinking with the grid; a wrong one plateaus at a fixed fraction.
FundamentalReport fundamental_solution_check(int n, double t_weight, const std::vector<int>& resolutions,
                                             double min_order = 1.5, Execution ex = Execution::parallel);

struct ConvolutionCheckReport {
  double left_invariance_error = 0;  // max relative |(τ_g f ∗ k)(g p) − (f ∗ k)(p)|
  double derivative_error = 0;       // max relative |X_1(f ∗ k) − f ∗ X_1 k|
};

// Both checks at points outside the support of the bump.
ConvolutionCheckReport convolution_checks(int n, double mu, const GridSpec& grid, Execution ex = Execution::parallel);

struct KernelSplitReport {
  double reconstruction_error = 0;  // max |local + tail − k| on grid nodes away from e
  double tail_sup = 0;
  std::vector<int> resolutions;
  std::vector<double> second_derivative_sup;  // sup |X_1 X_1 (f ∗ tail)| per resolution
};

KernelSplitReport kernel_split_check(int n, double mu, double R, const std::vector<int>& resolutions,
                                     Execution ex = Execution::parallel);

}  // namespace rumin
