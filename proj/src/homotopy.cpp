#include "rumin/homotopy.hpp"

#include "rumin/operators.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rumin {

namespace {

// Γ(k + ½)/√π = (2k)! / (4^k k!)
Rational half_gamma(int k)
{
  Rational r(1);
  for (int j = 1; j <= k; ++j) r *= Rational(2 * j - 1, 2);
  return r;
}

std::vector<std::pair<double, double>> expand_rule(const auto& abscissa, const auto& weights, bool odd)
{
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i < abscissa.size(); ++i) {
    const double a = abscissa[i];
    const double w = weights[i];
    if (odd && i == 0) {
      out.emplace_back(a, w);
      continue;
    }
    out.emplace_back(-a, w);
    out.emplace_back(a, w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <unsigned N>
std::vector<std::pair<double, double>> rule_of()
{
  using G = boost::math::quadrature::gauss<double, N>;
  return expand_rule(G::abscissa(), G::weights(), N % 2 == 1);
}

// Nodes and weights on [-1, 1].
std::vector<std::pair<double, double>> gauss_legendre(int order)
{
  switch (order) {
    case 8: return rule_of<8>();
    case 12: return rule_of<12>();
    case 16: return rule_of<16>();
    case 20: return rule_of<20>();
    case 24: return rule_of<24>();
    case 32: return rule_of<32>();
    case 40: return rule_of<40>();
    default: throw std::invalid_argument("gauss_legendre: unsupported order");
  }
}

// Polynomial in the 2N variables (x, y) with K_y ω(x) as coefficients; entries
// indexed by masks_of_degree(n, k−1).
std::vector<Polynomial> cartan_xy(const PolyForm& omega)
{
  if (omega.frame() != Frame::euclidean) throw std::invalid_argument("cartan_homotopy: Euclidean frame expected");
  const int k = omega.degree();
  if (k < 1) throw std::invalid_argument("cartan_homotopy: degree must be at least 1");
  const int n = omega.n();
  const int N = 2 * n + 1;
  const int nv = 2 * N + 1;  // x, y, s
  const int s_var = 2 * N;
  std::vector<Polynomial> images;
  for (int i = 0; i < N; ++i) {
    const Polynomial x = Polynomial::variable(nv, i);
    const Polynomial y = Polynomial::variable(nv, N + i);
    const Polynomial s = Polynomial::variable(nv, s_var);
    images.push_back(s * x + y - s * y);
  }
  const Polynomial s_pow = pow(Polynomial::variable(nv, s_var), k - 1);
  std::vector<Polynomial> acc(lambda_dimension(n, k - 1), Polynomial(nv));
  for (std::size_t j = 0; j < omega.size(); ++j) {
    if (omega[j].is_zero()) continue;
    const Polynomial c = omega[j].compose(images) * s_pow;
    const Mask S = omega.mask(j);
    int p = 0;
    for (Mask mm = S; mm; mm &= mm - 1, ++p) {
      const int i = std::countr_zero(mm);
      const Polynomial v = Polynomial::variable(nv, i) - Polynomial::variable(nv, N + i);
      Polynomial term = v * c;
      if (p % 2) term = -term;
      acc[mask_index(n, S & ~(Mask(1) << i))] += term;
    }
  }
  // ∫_0^1 s^e ds = 1/(e+1)
  std::vector<Polynomial> out;
  for (const auto& a : acc) {
    Polynomial r(2 * N);
    for (const auto& [e, c] : a.terms()) {
      Exponents xy(e.begin(), e.begin() + 2 * N);
      r.add_term(xy, c / (e[s_var] + 1));
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Rational ConvexDomain::inradius() const
{
  if (kind == Kind::euclidean_ball) return radius;
  // min over |z|^4 + t^2 = R^4 of |z|^2 + t^2 is attained at z = 0 or t = 0
  const Rational r2 = radius * radius;
  return r2 < radius ? r2 : radius;
}

Rational ball_moment_rational(const Exponents& beta, const Rational& r)
{
  const int N = static_cast<int>(beta.size());
  if (N % 2 == 0) throw std::invalid_argument("ball_moment_rational: odd dimension expected");
  int K = 0;
  Rational num(1);
  for (int b : beta) {
    if (b % 2) return Rational(0);
    K += b / 2;
    num *= half_gamma(b / 2);
  }
  // Γ((N + |β|)/2 + 1) = Γ((N−1)/2 + K + 1 + ½)
  return num / half_gamma((N - 1) / 2 + K + 1) * pow(r, static_cast<unsigned>(N + 2 * K));
}

AveragingWeight AveragingWeight::point_mass(int n)
{
  AveragingWeight w;
  w.kind_ = Kind::point_mass_at_origin;
  w.n_ = n;
  return w;
}

AveragingWeight AveragingWeight::bump(int n, int m, const Rational& r0)
{
  if (m < 0) throw std::invalid_argument("AveragingWeight: negative exponent");
  if (!(r0 > 0)) throw std::invalid_argument("AveragingWeight: support radius must be positive");
  AveragingWeight w;
  w.kind_ = Kind::polynomial_bump;
  w.n_ = n;
  w.m_ = m;
  w.r0_ = r0;
  const int N = 2 * n + 1;
  Polynomial base = Polynomial::constant(N, 1);
  for (int i = 0; i < N; ++i) {
    const Polynomial y = Polynomial::variable(N, i);
    base -= y * y * Rational(1 / (r0 * r0));
  }
  w.psi_ = pow(base, m);
  w.total_ = 0;
  for (const auto& [e, c] : w.psi_.terms()) w.total_ += c * ball_moment_rational(e, r0);
  if (sgn(w.total_) <= 0) throw std::logic_error("AveragingWeight: non-positive mass");
  return w;
}

AveragingWeight AveragingWeight::bump_for(int n, const ConvexDomain& domain, int m)
{
  return bump(n, m, domain.inradius() / 2);
}

Rational AveragingWeight::moment(const Exponents& beta) const
{
  if (static_cast<int>(beta.size()) != 2 * n_ + 1) throw std::invalid_argument("moment: arity");
  if (kind_ == Kind::point_mass_at_origin)
    return std::all_of(beta.begin(), beta.end(), [](int b) { return b == 0; }) ? Rational(1) : Rational(0);
  auto it = cache_.find(beta);
  if (it != cache_.end()) return it->second;
  Rational s(0);
  for (const auto& [e, c] : psi_.terms()) {
    Exponents g = beta;
    for (std::size_t i = 0; i < g.size(); ++i) g[i] += e[i];
    s += c * ball_moment_rational(g, r0_);
  }
  s /= total_;
  cache_.emplace(beta, s);
  return s;
}

bool AveragingWeight::supported_in(const ConvexDomain& domain) const
{
  return kind_ == Kind::point_mass_at_origin || r0_ <= domain.inradius();
}

PolyForm cartan_homotopy(const std::vector<Rational>& y, const PolyForm& omega)
{
  const int n = omega.n();
  const int N = 2 * n + 1;
  if (static_cast<int>(y.size()) != N) throw std::invalid_argument("cartan_homotopy: base point arity");
  const auto xy = cartan_xy(omega);
  std::vector<Polynomial> images;
  for (int i = 0; i < N; ++i) images.push_back(Polynomial::variable(N, i));
  for (int i = 0; i < N; ++i) images.push_back(Polynomial::constant(N, y[i]));
  PolyForm out(n, omega.degree() - 1, Frame::euclidean);
  for (std::size_t j = 0; j < xy.size(); ++j) out[j] = xy[j].compose(images);
  return out;
}

PolyForm averaged_homotopy(const AveragingWeight& psi, const PolyForm& omega)
{
  const int n = omega.n();
  if (psi.n() != n) throw std::invalid_argument("averaged_homotopy: weight dimension mismatch");
  if (!psi.normalized()) throw std::invalid_argument("averaged_homotopy: weight not normalized");
  const int N = 2 * n + 1;
  const auto xy = cartan_xy(omega);
  PolyForm out(n, omega.degree() - 1, Frame::euclidean);
  for (std::size_t j = 0; j < xy.size(); ++j) {
    Polynomial r(N);
    for (const auto& [e, c] : xy[j].terms()) {
      const Exponents beta(e.begin() + N, e.end());
      const Rational m = psi.moment(beta);
      if (sgn(m) == 0) continue;
      r.add_term(Exponents(e.begin(), e.begin() + N), c * m);
    }
    out[j] = std::move(r);
  }
  return out;
}

PolyForm euclidean_homotopy_residual(const AveragingWeight& psi, const PolyForm& omega)
{
  PolyForm r = omega - exterior_d(averaged_homotopy(psi, omega));
  if (omega.degree() < 2 * omega.n() + 1) r -= averaged_homotopy(psi, exterior_d(omega));
  return r;
}

PolyForm rumin_homotopy_K(const RuminContext& ctx, const AveragingWeight& psi, const PolyForm& omega)
{
  if (omega.frame() != Frame::invariant) throw std::invalid_argument("rumin_homotopy_K: invariant frame expected");
  if (omega.degree() < 1) throw std::invalid_argument("rumin_homotopy_K: degree must be at least 1");
  const PolyForm e = ctx.project_E(omega);
  const PolyForm k = to_invariant(averaged_homotopy(psi, to_euclidean(e)));
  return ctx.project_E0(ctx.project_E(k));
}

const std::vector<int>& gauss_legendre_orders()
{
  static const std::vector<int> orders{8, 12, 16, 20, 24, 32, 40};
  return orders;
}

QuadratureRule koranyi_ball_rule(int n, double radius, int order)
{
  if (!(radius > 0)) throw std::invalid_argument("koranyi_ball_rule: radius must be positive");
  if (n != 1 && n != 2) throw std::invalid_argument("koranyi_ball_rule: only n = 1, 2 supported");
  const auto gl = gauss_legendre(order);
  const double pi = std::numbers::pi;
  const double two_pi = 2 * pi;
  QuadratureRule rule;
  rule.n = n;
  // Gauge polar coordinates |z| = r cos^{1/2} φ, t = r² sin φ, φ ∈ (−π/2, π/2):
  // dz dt = r^{2n+1} cos^{n−1} φ dr dφ dσ_z with dσ_z the unit sphere measure.
  for (const auto& [a, wa] : gl) {
    const double r = radius * (a + 1) / 2;
    const double wr = wa * radius / 2 * std::pow(r, 2 * n + 1);
    for (const auto& [b, wb] : gl) {
      const double phi = pi / 2 * b;
      const double c = std::cos(phi);
      const double s = r * std::sqrt(c);
      const double t = r * r * std::sin(phi);
      const double w = wr * wb * pi / 2 * std::pow(c, n - 1);
      if (n == 1) {
        for (int k = 0; k < order; ++k) {
          const double ang = two_pi * k / order;
          rule.nodes.insert(rule.nodes.end(), {s * std::cos(ang), s * std::sin(ang), t});
          rule.weights.push_back(w * two_pi / order);
        }
        continue;
      }
      // z1 = s cos η e^{iφ1}, z2 = s sin η e^{iφ2}; dσ = cos η sin η dη dφ1 dφ2
      for (const auto& [e, we] : gl) {
        const double eta = pi / 4 * (e + 1);
        const double weta = we * pi / 4 * std::cos(eta) * std::sin(eta);
        for (int k1 = 0; k1 < order; ++k1)
          for (int k2 = 0; k2 < order; ++k2) {
            const double p1 = two_pi * k1 / order;
            const double p2 = two_pi * k2 / order;
            rule.nodes.insert(rule.nodes.end(),
                              {s * std::cos(eta) * std::cos(p1), s * std::sin(eta) * std::cos(p2),
                               s * std::cos(eta) * std::sin(p1), s * std::sin(eta) * std::sin(p2), t});
            rule.weights.push_back(w * weta * (two_pi / order) * (two_pi / order));
          }
      }
    }
  }
  return rule;
}

double form_lp_norm(const PolyForm& omega, const QuadratureRule& rule, double p)
{
  if (omega.frame() != Frame::invariant) throw std::invalid_argument("form_lp_norm: invariant frame expected");
  if (rule.n != omega.n()) throw std::invalid_argument("form_lp_norm: dimension mismatch");
  std::vector<CompiledPolynomial> coefs;
  for (std::size_t i = 0; i < omega.size(); ++i)
    if (!omega[i].is_zero()) coefs.emplace_back(omega[i]);
  const int dim = 2 * omega.n() + 1;
  double s = 0;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    double a = 0;
    for (const auto& c : coefs) {
      const double v = c(&rule.nodes[k * dim]);
      a += v * v;
    }
    s += rule.weights[k] * std::pow(a, p / 2);
  }
  return std::pow(s, 1 / p);
}

bool poincare_admissible(int n, int h, double p, double q)
{
  const double Q = homogeneous_dimension(n);
  const double gap = (h == n + 1 ? 2.0 : 1.0) / Q;
  return p > 1 && q >= p && std::isfinite(q) && 1 / p - 1 / q <= gap + 1e-12;
}

PoincareReport poincare_quotient(const RuminContext& ctx, const AveragingWeight& psi, int h,
                                 const std::vector<Polynomial>& omega, double radius, double lambda,
                                 double p, double q, int quadrature_order)
{
  const int n = ctx.n();
  if (h < 1 || h > ctx.top_degree()) throw std::out_of_range("poincare_quotient: degree out of range");
  if (!(lambda > 1)) throw std::invalid_argument("poincare_quotient: lambda must exceed 1");
  if (h <= 2 * n && !is_zero(dc_via_forms(ctx, h, omega)))
    throw std::invalid_argument("poincare_quotient: form is not d_c-closed");
  PoincareReport rep;
  rep.n = n;
  rep.h = h;
  rep.p = p;
  rep.q = q;
  rep.radius = radius;
  rep.lambda = lambda;
  rep.admissible = poincare_admissible(n, h, p, q);
  if (!rep.admissible) rep.warning = "exponents outside the admissible range";
  if (is_zero(omega)) return rep;
  const PolyForm w = ctx.from_e0(h, omega);
  const PolyForm phi = rumin_homotopy_K(ctx, psi, w);
  rep.norm_phi = form_lp_norm(phi, koranyi_ball_rule(n, radius, quadrature_order), q);
  rep.norm_omega = form_lp_norm(w, koranyi_ball_rule(n, lambda * radius, quadrature_order), p);
  rep.ratio = rep.norm_phi / rep.norm_omega;
  return rep;
}

double poincare_scaling_exponent(int n, int h, double p, double q)
{
  const double Q = homogeneous_dimension(n);
  return Q / q - Q / p + (h == n + 1 ? 2 : 1);
}

ScalingReport poincare_scaling_probe(const RuminContext& ctx, const AveragingWeight& psi, int h,
                                     const std::vector<Polynomial>& omega,
                                     const std::vector<Rational>& radii, double lambda, double p, double q,
                                     int quadrature_order)
{
  if (radii.size() < 2) throw std::invalid_argument("poincare_scaling_probe: need two radii");
  ScalingReport rep;
  const ExactPoint e(ctx.n());
  for (const auto& r : radii) {
    const auto omega_r = pullback_e0(ctx, h, e, Rational(1 / r), omega);
    rep.rows.push_back(poincare_quotient(ctx, psi, h, omega_r, r.get_d(), lambda, p, q, quadrature_order));
  }
  const auto& a = rep.rows.front();
  const auto& b = rep.rows.back();
  rep.fitted_exponent = std::log(b.ratio / a.ratio) / std::log(b.radius / a.radius);
  rep.expected_exponent = poincare_scaling_exponent(ctx.n(), h, p, q);
  rep.relative_error =
      std::abs(rep.fitted_exponent - rep.expected_exponent) / std::max(1.0, std::abs(rep.expected_exponent));
  return rep;
}

}  // namespace rumin
