#pragma once

// Euclidean averaged Cartan homotopy and the Rumin homotopy K built on it.
// Everything acting on forms is exact; only the ball norms are quadrature.

#include "rumin/forms.hpp"
#include "rumin/rumin_context.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rumin {

// Convex domain centred at e. Korányi balls centred at e are convex.
struct ConvexDomain {
  enum class Kind { koranyi_ball, euclidean_ball };
  Kind kind = Kind::koranyi_ball;
  Rational radius = 1;

  // Radius of the largest Euclidean ball about e inside the domain.
  Rational inradius() const;
};

// ψ on a Euclidean ball |y| < r0 about e: either δ_e or c (1 − |y|²/r0²)^m with
// ∫ψ = 1. Moments are exact: the common factor π^n of all ball integrals in
// R^{2n+1} cancels against the normalization.
class AveragingWeight {
 public:
  enum class Kind { point_mass_at_origin, polynomial_bump };

  static AveragingWeight point_mass(int n);
  static AveragingWeight bump(int n, int m, const Rational& r0);
  // Defaults m = 3 and r0 = half the inradius of the domain.
  static AveragingWeight bump_for(int n, const ConvexDomain& domain, int m = 3);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  int exponent() const { return m_; }
  const Rational& support_radius() const { return r0_; }

  // ∫ ψ(y) y^β dy; β has 2n+1 entries.
  Rational moment(const Exponents& beta) const;
  bool normalized() const { return moment(Exponents(2 * n_ + 1, 0)) == 1; }
  bool supported_in(const ConvexDomain& domain) const;

 private:
  Kind kind_ = Kind::point_mass_at_origin;
  int n_ = 1;
  int m_ = 0;
  Rational r0_ = 0;
  Polynomial psi_;        // unnormalized (1 − |y|²/r0²)^m
  Rational total_ = 1;    // rational part of ∫ψ
  mutable std::map<Exponents, Rational> cache_;
};

// Rational part of ∫_{|y|<r} y^β dy in R^N with N odd, i.e. the integral divided by
// π^{(N−1)/2}; zero when some β_i is odd.
Rational ball_moment_rational(const Exponents& beta, const Rational& r);

// K_y of a Euclidean-frame polynomial k-form at a rational base point y (k >= 1):
//   ⟨K_y ω(x) | ξ⟩ = ∫_0^1 s^{k−1} ⟨ω(s x + (1−s) y) | (x − y) ∧ ξ⟩ ds.
PolyForm cartan_homotopy(const std::vector<Rational>& y, const PolyForm& omega);

// K_Euc ω = ∫ ψ(y) K_y ω dy.
PolyForm averaged_homotopy(const AveragingWeight& psi, const PolyForm& omega);

// K = Π_E0 ∘ Π_E ∘ K_Euc ∘ Π_E on an invariant-frame form with values in E0^k.
PolyForm rumin_homotopy_K(const RuminContext& ctx, const AveragingWeight& psi, const PolyForm& omega);

// ω − d K ω − K d ω for Euclidean-frame ω (K_{k+1} d ω is skipped at top degree).
PolyForm euclidean_homotopy_residual(const AveragingWeight& psi, const PolyForm& omega);

// Quadrature over the Korányi ball B(e, R) (n <= 2) in gauge polar coordinates
// (r, φ) with |z| = r cos^{1/2} φ, t = r² sin φ, and polar (n = 1) or Hopf (n = 2)
// angles for the direction of z. Gauss–Legendre in r, φ and η, equispaced nodes
// in the remaining angles.
struct QuadratureRule {
  int n = 1;
  std::vector<double> nodes;    // (2n+1) doubles per node: x, y, t
  std::vector<double> weights;
  std::size_t size() const { return weights.size(); }
};

QuadratureRule koranyi_ball_rule(int n, double radius, int order);

// Supported Gauss–Legendre orders.
const std::vector<int>& gauss_legendre_orders();

// (∫_B |ω|^p)^{1/p} with |·| the norm in which the invariant coframe is orthonormal.
double form_lp_norm(const PolyForm& omega, const QuadratureRule& rule, double p);

struct PoincareReport {
  int n = 0;
  int h = 0;
  double p = 0;
  double q = 0;
  double radius = 0;
  double lambda = 0;
  double norm_phi = 0;
  double norm_omega = 0;
  double ratio = 0;
  bool admissible = true;
  std::string warning;
};

// 1/p − 1/q <= 1/Q (h ≠ n+1) or 2/Q (h = n+1), 1 < p <= q < ∞.
bool poincare_admissible(int n, int h, double p, double q);

// φ = K ω exactly, then ‖φ‖_{L^q(B(e,r))} / ‖ω‖_{L^p(B(e,λr))}. ω is given by
// E0^h coordinates and must be d_c-closed (std::invalid_argument otherwise).
PoincareReport poincare_quotient(const RuminContext& ctx, const AveragingWeight& psi, int h,
                                 const std::vector<Polynomial>& omega, double radius, double lambda,
                                 double p, double q, int quadrature_order = 20);

struct ScalingReport {
  std::vector<PoincareReport> rows;
  double fitted_exponent = 0;
  double expected_exponent = 0;
  double relative_error = 0;
};

// Q/q − Q/p + 1, or + 2 when h = n+1.
double poincare_scaling_exponent(int n, int h, double p, double q);

// ω_r = (δ_{1/r})^♯ ω placed on B(e, r) ⊂ B(e, λr) for each radius; the exponent
// is the log-ratio slope between the first and last radius.
ScalingReport poincare_scaling_probe(const RuminContext& ctx, const AveragingWeight& psi, int h,
                                     const std::vector<Polynomial>& omega,
                                     const std::vector<Rational>& radii, double lambda, double p, double q,
                                     int quadrature_order = 20);

}  // namespace rumin
