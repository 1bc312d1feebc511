#include "rumin/convolution.hpp"

#include <cmath>
#include <stdexcept>

namespace rumin {

namespace {

struct Support {
  int dim = 0;
  std::vector<double> coords;  // dim per entry
  std::vector<double> weighted;  // w_q f(q)
  std::vector<double> values;    // f(q)
  std::vector<double> weights;   // w_q
};

Support support_of(const Grid& f)
{
  Support s;
  s.dim = f.spec().dims();
  std::vector<double> p(s.dim);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    f.point(i, p.data());
    s.coords.insert(s.coords.end(), p.begin(), p.end());
    const double w = f.weight(i);
    s.weighted.push_back(w * f[i]);
    s.values.push_back(f[i]);
    s.weights.push_back(w);
  }
  return s;
}

// Σ_q w_q f(q) k(q⁻¹ p) in support order.
double convolve_point(const Support& s, const HomogeneousKernel& k, const double* p, std::size_t& singular,
                      std::size_t& excluded)
{
  const int n = k.n();
  const int d = s.dim;
  const double scale = 1e-12 * (1 + std::abs(p[d - 1]));
  double acc = 0;
  double r[16];
  for (std::size_t j = 0; j < s.weighted.size(); ++j) {
    const double* q = &s.coords[j * d];
    double twist = 0;
    bool at_origin = true;
    for (int a = 0; a < n; ++a) {
      r[a] = p[a] - q[a];
      r[n + a] = p[n + a] - q[n + a];
      twist += q[a] * p[n + a] - q[n + a] * p[a];
    }
    r[2 * n] = p[2 * n] - q[2 * n] - 0.5 * twist;
    for (int a = 0; a < d; ++a)
      if (std::abs(r[a]) > scale) {
        at_origin = false;
        break;
      }
    if (!at_origin) {
      acc += s.weighted[j] * k(r);
      continue;
    }
    if (k.degree() >= 0 || k.part() == HomogeneousKernel::Part::tail) {
      acc += s.weighted[j] * k(r);
    } else if (k.derivative_field() < 0 && k.mu() > 0 && k.t_weight() == 1) {
      acc += s.values[j] * k.singular_cell_integral(s.weights[j]);
      ++singular;
    } else {
      ++excluded;
    }
  }
  return acc;
}

}  // namespace

std::vector<double> convolve_at(const Grid& f, const HomogeneousKernel& k, const std::vector<RealPoint>& points,
                                Execution ex, ConvolutionStats* stats)
{
  if (k.n() != f.spec().n) throw std::invalid_argument("convolve_at: dimension mismatch");
  const Support s = support_of(f);
  const int d = s.dim;
  std::vector<double> flat;
  for (const auto& p : points) {
    if (p.n() != k.n()) throw std::invalid_argument("convolve_at: point dimension mismatch");
    for (int a = 0; a < d; ++a) flat.push_back(p.coord(a));
  }
  std::vector<double> out(points.size(), 0.0);
  std::size_t singular = 0, excluded = 0;
  const auto count = static_cast<std::ptrdiff_t>(points.size());
  if (ex == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : singular, excluded)
    for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = convolve_point(s, k, &flat[i * d], singular, excluded);
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = convolve_point(s, k, &flat[i * d], singular, excluded);
  }
  if (stats) {
    stats->singular_cells += singular;
    stats->excluded_cells += excluded;
  }
  return out;
}

Grid group_convolve(const Grid& f, const HomogeneousKernel& k, Execution ex, ConvolutionStats* stats)
{
  if (k.n() != f.spec().n) throw std::invalid_argument("group_convolve: dimension mismatch");
  const Support s = support_of(f);
  Grid out(f.spec());
  std::size_t singular = 0, excluded = 0;
  const auto count = static_cast<std::ptrdiff_t>(out.size());
  auto body = [&](std::ptrdiff_t i, std::size_t& sing, std::size_t& exc) {
    double p[16];
    out.point(i, p);
    out[i] = convolve_point(s, k, p, sing, exc);
  };
  if (ex == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : singular, excluded)
    for (std::ptrdiff_t i = 0; i < count; ++i) body(i, singular, excluded);
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) body(i, singular, excluded);
  }
  if (stats) {
    stats->singular_cells += singular;
    stats->excluded_cells += excluded;
  }
  return out;
}

}  // namespace rumin
