#include "rumin/probes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rumin {

namespace {

double gauge_of(int n, const double* p)
{
  double r2 = 0;
  for (int k = 0; k < 2 * n; ++k) r2 += p[k] * p[k];
  return std::sqrt(std::sqrt(r2 * r2 + p[2 * n] * p[2 * n]));
}

bool strictly_monotone(const std::vector<double>& v)
{
  if (v.size() < 2) return false;
  bool up = true, down = true;
  for (std::size_t i = 1; i < v.size(); ++i) {
    up = up && v[i] > v[i - 1];
    down = down && v[i] < v[i - 1];
  }
  return up || down;
}

double spread_of(const std::vector<double>& v)
{
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi / *lo - 1;
}

// Unit-gauge direction used for rays: x_j = 0.6, y_j = 0.2, t = 0.4, then normalized.
RealPoint unit_direction(int n)
{
  RealPoint p(std::vector<double>(n, 0.6), std::vector<double>(n, 0.2), 0.4);
  return dilate(1 / gauge(p), p);
}

bool on_boundary(const Grid& g, std::size_t i)
{
  for (int a = 0; a < g.spec().dims(); ++a) {
    const int k = g.index(i, a);
    if (k == 0 || k == g.spec().nodes(a) - 1) return true;
  }
  return false;
}

bool interior(const Grid& g, std::size_t i, int margin)
{
  for (int a = 0; a < g.spec().dims(); ++a) {
    const int k = g.index(i, a);
    if (k < margin || k > g.spec().nodes(a) - 1 - margin) return false;
  }
  return true;
}

}  // namespace

double gauge_bump(int n, double R, const double* p) { return cutoff_profile(gauge_of(n, p) / R); }

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y)
{
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("loglog_slope: need two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double a = std::log(x[i]);
    const double b = std::log(y[i]);
    sx += a;
    sy += b;
    sxx += a * a;
    sxy += a * b;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

ConvergenceReport derivative_convergence(const Polynomial& u, int n, int field, const std::vector<int>& resolutions,
                                         double half_width, Execution ex)
{
  ConvergenceReport rep;
  rep.n = n;
  rep.field = field;
  const CompiledPolynomial cu(u);
  const CompiledPolynomial oracle(derive(field, u));
  for (int N : resolutions) {
    const GridSpec spec{n, half_width, N, N};
    const Grid g = Grid::sample(spec, [&](const double* p) { return cu(p); });
    const auto d = discrete_derivative(g, field, ex);
    double err = 0;
    double p[16];
    for (std::size_t i = 0; i < g.size(); ++i) {
      g.point(i, p);
      bool inner = true;
      for (int a = 0; a < spec.dims(); ++a) inner = inner && std::abs(p[a]) <= -spec.lower(a) / 2;
      if (!inner) continue;
      err = std::max(err, std::abs(d.values[i] - oracle(p)));
    }
    rep.resolutions.push_back(N);
    rep.spacings.push_back(spec.spacing(0));
    rep.errors.push_back(err);
  }
  rep.observed_order = loglog_slope(rep.spacings, rep.errors);
  return rep;
}

DecayReport decay_probe(int n, double mu, const GridSpec& grid, const std::vector<double>& radii, Execution ex)
{
  if (grid.n != n) throw std::invalid_argument("decay_probe: grid dimension mismatch");
  DecayReport rep;
  rep.n = n;
  rep.mu = mu;
  rep.resolution = grid.resolution;
  rep.radii = radii;
  const double R = grid.half_width;
  const Grid f = Grid::sample(grid, [&](const double* p) { return gauge_bump(n, R, p); });
  const RealPoint dir = unit_direction(n);
  std::vector<RealPoint> points;
  for (double s : radii) points.push_back(dilate(s, dir));
  const auto v = convolve_at(f, HomogeneousKernel(n, mu), points, ex);
  for (double x : v) rep.values.push_back(std::abs(x));
  rep.expected_slope = mu - homogeneous_dimension(n);
  rep.fitted_slope = loglog_slope(radii, rep.values);
  rep.relative_error = std::abs(rep.fitted_slope - rep.expected_slope) / std::abs(rep.expected_slope);
  return rep;
}

double critical_exponent_q(int n, double alpha, double p)
{
  const double Q = homogeneous_dimension(n);
  if (!(alpha > 0 && alpha < Q)) throw std::invalid_argument("critical_exponent_q: need 0 < alpha < Q");
  if (!(p > 1 && p < Q / alpha)) throw std::invalid_argument("critical_exponent_q: need 1 < p < Q/alpha");
  return 1 / (1 / p - alpha / Q);
}

DilationProbeReport lp_lq_probe(int n, double alpha, double p, const std::vector<double>& lambdas,
                                const GridSpec& grid, bool dilation_adapted, double control_factor, Execution ex)
{
  DilationProbeReport rep;
  rep.n = n;
  rep.p = p;
  rep.q = critical_exponent_q(n, alpha, p);
  rep.control_q = control_factor * rep.q;
  rep.dilation_adapted = dilation_adapted;
  rep.lambdas = lambdas;
  const HomogeneousKernel k(n, alpha);
  const double R = grid.half_width / 2;
  for (double lam : lambdas) {
    const GridSpec spec = dilation_adapted ? grid.dilated(1 / lam) : grid;
    const Grid u = Grid::sample(spec, [&](const double* x) { return gauge_bump(n, R / lam, x); });
    const Grid w = group_convolve(u, k, ex, &rep.stats);
    const double up = lp_norm(u, p, {}, ex);
    rep.ratios.push_back(lp_norm(w, rep.q, {}, ex) / up);
    rep.control_ratios.push_back(lp_norm(w, rep.control_q, {}, ex) / up);
  }
  rep.spread = spread_of(rep.ratios);
  rep.control_drift = spread_of(rep.control_ratios);
  rep.control_monotone = strictly_monotone(rep.control_ratios);
  return rep;
}

double sobolev_ratio(const Grid& u, double p, double q, Execution ex, std::size_t* fallbacks)
{
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0 && on_boundary(u, i)) throw std::invalid_argument("sobolev_ratio: u must vanish on the grid boundary");
  const double uq = lp_norm(u, q, {}, ex);
  if (uq == 0) return 0;
  std::vector<Grid> grad;
  for (int i = 0; i < 2 * u.spec().n; ++i) {
    auto d = discrete_horizontal_derivative(u, i, ex);
    if (fallbacks) *fallbacks += d.boundary_fallbacks;
    grad.push_back(std::move(d.values));
  }
  return uq / vector_lp_norm(grad, p, {}, ex);
}

DilationProbeReport scalar_sobolev_check(int n, double p, const std::vector<double>& lambdas, const GridSpec& grid,
                                         bool dilation_adapted, double control_factor, Execution ex)
{
  DilationProbeReport rep;
  rep.n = n;
  rep.p = p;
  rep.q = critical_exponent_q(n, 1, p);
  rep.control_q = control_factor * rep.q;
  rep.dilation_adapted = dilation_adapted;
  rep.lambdas = lambdas;
  const double R = grid.half_width / 2;
  for (double lam : lambdas) {
    const GridSpec spec = dilation_adapted ? grid.dilated(1 / lam) : grid;
    const Grid u = Grid::sample(spec, [&](const double* x) { return gauge_bump(n, R / lam, x); });
    rep.ratios.push_back(sobolev_ratio(u, p, rep.q, ex, &rep.boundary_fallbacks));
    rep.control_ratios.push_back(sobolev_ratio(u, p, rep.control_q, ex));
  }
  rep.spread = spread_of(rep.ratios);
  rep.control_drift = spread_of(rep.control_ratios);
  rep.control_monotone = strictly_monotone(rep.control_ratios);
  return rep;
}

FundamentalReport fundamental_solution_check(int n, double t_weight, const std::vector<int>& resolutions,
                                             double min_order, Execution ex)
{
  FundamentalReport rep;
  rep.n = n;
  rep.t_weight = t_weight;
  rep.resolutions = resolutions;
  const HomogeneousKernel F(n, 2, t_weight);  // degree 2 − Q
  for (int N : resolutions) {
    const GridSpec spec{n, 1, N, N};
    const Grid f = Grid::sample(spec, [&](const double* p) {
      const double v = F(p);
      return std::isfinite(v) ? v : 0.0;
    });
    Grid lap(spec), mag(spec);
    for (int j = 0; j < 2 * n; ++j) {
      const auto once = discrete_horizontal_derivative(f, j, ex);
      const auto twice = discrete_horizontal_derivative(once.values, j, ex);
      for (std::size_t i = 0; i < f.size(); ++i) {
        lap[i] += twice.values[i];
        mag[i] += std::abs(twice.values[i]);
      }
    }
    double num = 0, den = 0;
    double p[16];
    for (std::size_t i = 0; i < f.size(); ++i) {
      f.point(i, p);
      const double rho = gauge_of(n, p);
      if (rho <= 0.5 || rho >= 0.75) continue;
      const double w = f.weight(i);
      num += w * lap[i] * lap[i];
      den += w * mag[i] * mag[i];
    }
    rep.residuals.push_back(std::sqrt(num / den));
    rep.spacings.push_back(spec.spacing(0));
  }
  bool decreasing = rep.residuals.size() >= 2;
  for (std::size_t i = 1; i < rep.residuals.size(); ++i) decreasing = decreasing && rep.residuals[i] < rep.residuals[i - 1];
  rep.observed_order = rep.residuals.size() >= 2 ? loglog_slope(rep.spacings, rep.residuals) : 0;
  rep.harmonic = decreasing && rep.observed_order >= min_order;
  return rep;
}

ConvolutionCheckReport convolution_checks(int n, double mu, const GridSpec& grid, Execution ex)
{
  ConvolutionCheckReport rep;
  const double L = grid.half_width;
  const double R = L / 2;
  const HomogeneousKernel k(n, mu);
  const Grid f = Grid::sample(grid, [&](const double* p) { return gauge_bump(n, R, p); });
  const RealPoint dir = unit_direction(n);
  std::vector<RealPoint> points;
  for (double s : {1.5, 2.0, 3.0}) points.push_back(dilate(s * L, dir));

  // left translation by g: (τ_g f)(q) = f(g⁻¹ q)
  RealPoint g(std::vector<double>(n, 0.2 * L), std::vector<double>(n, -0.1 * L), 0.05 * L * L);
  const RealPoint gi = inverse(g);
  const Grid fg = Grid::sample(grid, [&](const double* p) {
    RealPoint q(std::vector<double>(p, p + n), std::vector<double>(p + n, p + 2 * n), p[2 * n]);
    const RealPoint r = multiply(gi, q);
    std::vector<double> c(2 * n + 1);
    for (int a = 0; a <= 2 * n; ++a) c[a] = r.coord(a);
    return gauge_bump(n, R, c.data());
  });
  std::vector<RealPoint> moved;
  for (const auto& p : points) moved.push_back(multiply(g, p));
  const auto a = convolve_at(f, k, points, ex);
  const auto b = convolve_at(fg, k, moved, ex);
  for (std::size_t i = 0; i < a.size(); ++i)
    rep.left_invariance_error = std::max(rep.left_invariance_error, std::abs(a[i] - b[i]) / std::abs(a[i]));

  // X_1 (f ∗ k) by a central group step against f ∗ (X_1 k)
  const double eta = 1e-4 * L;
  std::vector<RealPoint> plus, minus;
  for (const auto& p : points) {
    RealPoint e(n);
    e.x[0] = eta;
    plus.push_back(multiply(p, e));
    e.x[0] = -eta;
    minus.push_back(multiply(p, e));
  }
  const auto vp = convolve_at(f, k, plus, ex);
  const auto vm = convolve_at(f, k, minus, ex);
  const auto dk = convolve_at(f, k.derived(0), points, ex);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double fd = (vp[i] - vm[i]) / (2 * eta);
    rep.derivative_error = std::max(rep.derivative_error, std::abs(fd - dk[i]) / std::abs(dk[i]));
  }
  return rep;
}

KernelSplitReport kernel_split_check(int n, double mu, double R, const std::vector<int>& resolutions, Execution ex)
{
  KernelSplitReport rep;
  rep.resolutions = resolutions;
  const HomogeneousKernel k(n, mu);
  const auto [local, tail] = kernel_split(k, R);
  for (int N : resolutions) {
    const GridSpec spec{n, 1, N, N};
    Grid dummy(spec);
    double p[16];
    for (std::size_t i = 0; i < dummy.size(); ++i) {
      dummy.point(i, p);
      const double tv = tail(p);
      rep.tail_sup = std::max(rep.tail_sup, std::abs(tv));
      if (gauge_of(n, p) == 0) continue;
      const double kv = k(p);
      rep.reconstruction_error = std::max(rep.reconstruction_error, std::abs(local(p) + tv - kv) / std::abs(kv));
    }
    const Grid f = Grid::sample(spec, [&](const double* x) { return gauge_bump(n, 0.5, x); });
    const Grid w = group_convolve(f, tail, ex);
    const auto d1 = discrete_horizontal_derivative(w, 0, ex);
    const auto d2 = discrete_horizontal_derivative(d1.values, 0, ex);
    double sup = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (interior(w, i, 3)) sup = std::max(sup, std::abs(d2.values[i]));
    rep.second_derivative_sup.push_back(sup);
  }
  return rep;
}

}  // namespace rumin
