#include "rumin/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rumin {

namespace {

constexpr std::size_t block_size = 4096;

std::vector<double> simpson(int count, double h)
{
  std::vector<double> w(count);
  for (int i = 0; i < count; ++i) w[i] = (i == 0 || i == count - 1 ? 1 : (i % 2 ? 4 : 2)) * h / 3;
  return w;
}

// Cubic Lagrange interpolation along the t axis of u at column `base` (t index 0).
double interpolate_t(const Grid& u, std::size_t base, double t, bool& extrapolated)
{
  const GridSpec& s = u.spec();
  const int tax = 2 * s.n;
  const int nt = s.t_resolution;
  const double lo = s.lower(tax);
  const double h = s.spacing(tax);
  const double r = (t - lo) / h;
  extrapolated = r < -1e-12 || r > nt - 1 + 1e-12;
  const int j0 = std::clamp(static_cast<int>(std::floor(r)) - 1, 0, nt - 4);
  double v = 0;
  for (int a = 0; a < 4; ++a) {
    double l = 1;
    for (int b = 0; b < 4; ++b)
      if (b != a) l *= (r - (j0 + b)) / double(a - b);
    v += l * u[base + j0 + a];
  }
  return v;
}

}  // namespace

std::size_t GridSpec::size() const
{
  std::size_t s = 1;
  for (int k = 0; k < dims(); ++k) s *= nodes(k);
  return s;
}

GridSpec GridSpec::dilated(double s) const
{
  GridSpec g = *this;
  g.half_width *= s;
  return g;
}

void GridSpec::validate() const
{
  if (n < 1) throw std::invalid_argument("GridSpec: n must be positive");
  if (!(half_width > 0)) throw std::invalid_argument("GridSpec: half-width must be positive");
  for (int r : {resolution, t_resolution})
    if (r < 5 || r % 2 == 0) throw std::invalid_argument("GridSpec: resolution must be odd and >= 5");
}

Grid::Grid(const GridSpec& spec) : spec_(spec)
{
  spec_.validate();
  const int d = spec_.dims();
  strides_.assign(d, 1);
  for (int k = d - 2; k >= 0; --k) strides_[k] = strides_[k + 1] * spec_.nodes(k + 1);
  for (int k = 0; k < d; ++k) weights_.push_back(simpson(spec_.nodes(k), spec_.spacing(k)));
  values_.assign(spec_.size(), 0.0);
}

void Grid::point(std::size_t flat, double* p) const
{
  for (int k = 0; k < spec_.dims(); ++k) p[k] = coordinate(k, index(flat, k));
}

RealPoint Grid::point(std::size_t flat) const
{
  const int n = spec_.n;
  std::vector<double> c(2 * n + 1);
  point(flat, c.data());
  return RealPoint(std::vector<double>(c.begin(), c.begin() + n), std::vector<double>(c.begin() + n, c.begin() + 2 * n),
                   c[2 * n]);
}

double Grid::weight(std::size_t flat) const
{
  double w = 1;
  for (int k = 0; k < spec_.dims(); ++k) w *= weights_[k][index(flat, k)];
  return w;
}

Grid Grid::sample(const GridSpec& spec, const std::function<double(const double*)>& f)
{
  Grid g(spec);
  std::vector<double> p(spec.dims());
  for (std::size_t i = 0; i < g.size(); ++i) {
    g.point(i, p.data());
    g[i] = f(p.data());
  }
  return g;
}

double deterministic_sum(std::size_t count, const std::function<double(std::size_t)>& term, Execution ex)
{
  const std::size_t blocks = (count + block_size - 1) / block_size;
  std::vector<double> partial(blocks, 0.0);
  auto run = [&](std::size_t b) {
    double s = 0;
    const std::size_t end = std::min(count, (b + 1) * block_size);
    for (std::size_t i = b * block_size; i < end; ++i) s += term(i);
    partial[b] = s;
  };
  if (ex == Execution::parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) run(b);
  } else {
    for (std::size_t b = 0; b < blocks; ++b) run(b);
  }
  double s = 0;
  for (double v : partial) s += v;
  return s;
}

DerivativeResult discrete_derivative(const Grid& u, int field, Execution ex)
{
  const GridSpec& s = u.spec();
  const int n = s.n;
  if (field < 0 || field > 2 * n) throw std::out_of_range("discrete_derivative: field out of range");
  const int tax = 2 * n;
  DerivativeResult res{Grid(s), 0, 0};
  const std::size_t count = u.size();
  std::vector<unsigned char> fallback(count, 0), extrap(count, 0);

  auto kernel = [&](std::size_t i) {
    if (field == tax) {
      const int it = u.index(i, tax);
      const double h = s.spacing(tax);
      const int nt = s.t_resolution;
      if (it > 0 && it < nt - 1) {
        res.values[i] = (u[i + 1] - u[i - 1]) / (2 * h);
      } else if (it == 0) {
        res.values[i] = (-3 * u[i] + 4 * u[i + 1] - u[i + 2]) / (2 * h);
        fallback[i] = 1;
      } else {
        res.values[i] = (3 * u[i] - 4 * u[i - 1] + u[i - 2]) / (2 * h);
        fallback[i] = 1;
      }
      return;
    }
    const int axis = field;
    const int j = field % n;
    const bool is_x = field < n;
    const double h = s.spacing(axis);
    const int ia = u.index(i, axis);
    const int na = s.nodes(axis);
    const int it = u.index(i, tax);
    const std::size_t column = i - static_cast<std::size_t>(it);  // t index 0 of this column
    // p·(σ e_i): axis index moves by σ/h, t moves by −½ y_j σ (X_j) or +½ x_j σ (Y_j)
    const double other = u.coordinate(is_x ? n + j : j, u.index(i, is_x ? n + j : j));
    const double t = u.coordinate(tax, it);
    auto value = [&](int steps) {
      const double sigma = steps * h;
      const double tt = t + (is_x ? -0.5 * other * sigma : 0.5 * other * sigma);
      const std::size_t col = column + static_cast<std::ptrdiff_t>(steps) * static_cast<std::ptrdiff_t>(u.stride(axis));
      bool ex_flag = false;
      const double v = interpolate_t(u, col, tt, ex_flag);
      if (ex_flag) extrap[i] = 1;
      return v;
    };
    if (ia > 0 && ia < na - 1) {
      res.values[i] = (value(1) - value(-1)) / (2 * h);
    } else if (ia == 0) {
      res.values[i] = (-3 * value(0) + 4 * value(1) - value(2)) / (2 * h);
      fallback[i] = 1;
    } else {
      res.values[i] = (3 * value(0) - 4 * value(-1) + value(-2)) / (2 * h);
      fallback[i] = 1;
    }
  };

  if (ex == Execution::parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) kernel(i);
  } else {
    for (std::size_t i = 0; i < count; ++i) kernel(i);
  }
  for (std::size_t i = 0; i < count; ++i) {
    res.boundary_fallbacks += fallback[i];
    res.extrapolations += extrap[i];
  }
  return res;
}

DerivativeResult discrete_horizontal_derivative(const Grid& u, int field, Execution ex)
{
  if (field < 0 || field >= 2 * u.spec().n) throw std::out_of_range("discrete_horizontal_derivative: not horizontal");
  return discrete_derivative(u, field, ex);
}

bool Region::contains(const double* p) const
{
  if (radius <= 0) return true;
  const int n = center.n();
  RealPoint q(std::vector<double>(p, p + n), std::vector<double>(p + n, p + 2 * n), p[2 * n]);
  return distance(center, q) < radius;
}

double grid_integral(const Grid& u, Execution ex)
{
  return deterministic_sum(u.size(), [&](std::size_t i) { return u[i] == 0 ? 0.0 : u.weight(i) * u[i]; }, ex);
}

double lp_norm(const Grid& u, double p, const Region& region, Execution ex)
{
  if (!(p >= 1)) throw std::invalid_argument("lp_norm: p must be >= 1");
  const double s = deterministic_sum(
      u.size(),
      [&](std::size_t i) {
        if (u[i] == 0) return 0.0;
        if (region.radius > 0) {
          double c[16];
          u.point(i, c);
          if (!region.contains(c)) return 0.0;
        }
        return u.weight(i) * std::pow(std::abs(u[i]), p);
      },
      ex);
  return std::pow(s, 1 / p);
}

double vector_lp_norm(const std::vector<Grid>& g, double p, const Region& region, Execution ex)
{
  if (g.empty()) return 0;
  const Grid& u = g.front();
  const double s = deterministic_sum(
      u.size(),
      [&](std::size_t i) {
        double a = 0;
        for (const auto& c : g) a += c[i] * c[i];
        if (a == 0) return 0.0;
        if (region.radius > 0) {
          double c[16];
          u.point(i, c);
          if (!region.contains(c)) return 0.0;
        }
        return u.weight(i) * std::pow(a, p / 2);
      },
      ex);
  return std::pow(s, 1 / p);
}

std::vector<std::vector<int>> multi_indices_of_degree(int n, int m)
{
  const int N = 2 * n + 1;
  std::vector<std::vector<int>> out;
  std::vector<int> cur(N, 0);
  // enumerate exponent vectors with Σ_{i<2n} e_i + 2 e_T = m
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == N - 1) {
      if (left % 2 == 0) {
        cur[k] = left / 2;
        out.push_back(cur);
        cur[k] = 0;
      }
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[k] = e;
      rec(k + 1, left - e);
    }
    cur[k] = 0;
  };
  rec(0, m);
  return out;
}

SobolevNormReport sobolev_norm(const Grid& u, int m, double p, const Region& region, Execution ex)
{
  if (m < 0 || m > 2) throw std::invalid_argument("sobolev_norm: m must be in [0, 2]");
  SobolevNormReport rep;
  rep.value = lp_norm(u, p, region, ex);
  if (m == 0) return rep;
  for (const auto& I : multi_indices_of_degree(u.spec().n, m)) {
    // W^I = W_1^{i_1} ... T^{i_T}: apply the rightmost factor first
    Grid g = u;
    for (int k = static_cast<int>(I.size()) - 1; k >= 0; --k)
      for (int r = 0; r < I[k]; ++r) {
        auto d = discrete_derivative(g, k, ex);
        rep.boundary_fallbacks += d.boundary_fallbacks;
        g = std::move(d.values);
      }
    const double v = lp_norm(g, p, region, ex);
    rep.multi_indices.push_back(I);
    rep.component_norms.push_back(v);
    rep.value += v;
  }
  return rep;
}

}  // namespace rumin
