#include "rumin/homotopy.hpp"
#include "rumin/kernel.hpp"
#include "rumin/operators.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace rumin;

namespace {

Polynomial var(int nv, int k) { return Polynomial::variable(nv, k); }
Polynomial cst(int nv, const Rational& c) { return Polynomial::constant(nv, c); }
Mask bit(int i) { return Mask(1) << i; }

int max_degree(const PolyForm& f)
{
  int d = -1;
  for (std::size_t i = 0; i < f.size(); ++i) d = std::max(d, f[i].degree());
  return d;
}

int max_weighted_degree(const PolyVector& v, int n)
{
  int d = -1;
  for (const auto& p : v)
    if (!p.is_zero()) d = std::max(d, p.weighted_degree(heisenberg_weights(n)));
  return d;
}

}  // namespace

TEST_CASE("Cartan homotopy examples")
{
  const int nv = 3;
  PolyForm dx(1, 1, Frame::euclidean);
  dx.add(bit(0), cst(nv, 1));
  const PolyForm k = cartan_homotopy({0, 0, 0}, dx);
  CHECK(k[0] == var(nv, 0));
  const PolyForm ky = cartan_homotopy({2, 0, 0}, dx);
  CHECK(ky[0] == var(nv, 0) - cst(nv, 2));
  PolyForm f(1, 0, Frame::euclidean);
  f[0] = var(nv, 0);
  CHECK_THROWS(cartan_homotopy({0, 0, 0}, f));
  // x dy: K_0 = ∫ s · s x ⟨dy | z ∧ ·⟩ ds
  PolyForm xdy(1, 1, Frame::euclidean);
  xdy.add(bit(1), var(nv, 0));
  CHECK(cartan_homotopy({0, 0, 0}, xdy)[0] == var(nv, 0) * var(nv, 1) * make_rational(1, 2));
}

TEST_CASE("ball moments")
{
  CHECK(ball_moment_rational({0, 0, 0}, 1) == make_rational(4, 3));
  CHECK(ball_moment_rational({2, 0, 0}, 1) == make_rational(4, 15));
  CHECK(ball_moment_rational({1, 0, 0}, 1) == 0);
  CHECK(ball_moment_rational({0, 0, 0, 0, 0}, 1) == make_rational(8, 15));
  CHECK(ball_moment_rational({2, 0, 0}, 2) == make_rational(4, 15) * 32);
  for (int n = 1; n <= 2; ++n) {
    const auto pm = AveragingWeight::point_mass(n);
    CHECK(pm.normalized());
    Exponents b(2 * n + 1, 0);
    b[0] = 2;
    CHECK(pm.moment(b) == 0);
    const ConvexDomain dom;
    const auto psi = AveragingWeight::bump_for(n, dom);
    CHECK(psi.normalized());
    CHECK(psi.exponent() == 3);
    CHECK(psi.supported_in(dom));
    CHECK(psi.moment(b) > 0);
    b[0] = 1;
    CHECK(psi.moment(b) == 0);
  }
}

TEST_CASE("Euclidean homotopy formula")
{
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 2; ++n) {
    const auto point = AveragingWeight::point_mass(n);
    const auto bump = AveragingWeight::bump_for(n, ConvexDomain{});
    for (const auto* psi : {&point, &bump})
      for (int k = 1; k <= std::min(3, 2 * n + 1); ++k)
        for (int s = 0; s < 3; ++s) {
          const auto w = random_poly_form(n, k, 3, 3, 5, rng, Frame::euclidean);
          CHECK(euclidean_homotopy_residual(*psi, w).is_zero());
          CHECK(max_degree(averaged_homotopy(*psi, w)) <= max_degree(w) + 1);
        }
  }
}

TEST_CASE("Rumin homotopy inverts d_c on exact forms")
{
  std::mt19937_64 rng(12);
  for (int n = 1; n <= 2; ++n) {
    const RuminContext ctx(n);
    const auto point = AveragingWeight::point_mass(n);
    const auto bump = AveragingWeight::bump_for(n, ConvexDomain{});
    for (const auto* psi : {&point, &bump})
      for (int k = 1; k <= 2 * n + 1; ++k)
        for (int s = 0; s < 2; ++s) {
          const auto phi = random_e0_vector(ctx, k - 1, 3, 3, 5, rng);
          const auto om = dc_via_forms(ctx, k - 1, phi);
          const auto K = ctx.to_e0(rumin_homotopy_K(ctx, *psi, ctx.from_e0(k, om)));
          CHECK(is_zero(dc_via_forms(ctx, k - 1, K) - om));
          if (!is_zero(om))
            CHECK(max_weighted_degree(K, n) <= max_weighted_degree(om, n) + (k == n + 1 ? 2 : 1));
        }
    CHECK_THROWS(rumin_homotopy_K(ctx, point, PolyForm(n, 0)));
  }
  const RuminContext c1(1);
  PolyForm dx(1, 1);
  dx.add(bit(0), cst(3, 1));
  CHECK(rumin_homotopy_K(c1, AveragingWeight::point_mass(1), dx)[0] == var(3, 0));
}

TEST_CASE("Koranyi ball quadrature")
{
  for (int order : {12, 20}) {
    const auto rule = koranyi_ball_rule(1, 1.5, order);
    double v = 0;
    for (double w : rule.weights) v += w;
    CHECK(v == doctest::Approx(std::numbers::pi * std::numbers::pi / 2 * std::pow(1.5, 4)).epsilon(1e-10));
  }
  const auto r2 = koranyi_ball_rule(2, 1, 20);
  double v2 = 0;
  for (double w : r2.weights) v2 += w;
  CHECK(v2 == doctest::Approx(koranyi_ball_volume(2)).epsilon(1e-10));
  // all nodes inside the ball
  for (std::size_t i = 0; i < r2.size(); ++i) {
    const double* p = &r2.nodes[i * 5];
    const double z2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3];
    CHECK(z2 * z2 + p[4] * p[4] <= 1 + 1e-12);
  }
  CHECK_THROWS(koranyi_ball_rule(3, 1, 12));
  CHECK_THROWS(koranyi_ball_rule(1, 1, 10));
}

TEST_CASE("Poincare quotient")
{
  const RuminContext ctx(1);
  const auto point = AveragingWeight::point_mass(1);
  const PolyVector zero(ctx.dim_e0(1), Polynomial(3));
  CHECK(poincare_quotient(ctx, point, 1, zero, 1, 2, 2, 4).ratio == 0);
  PolyVector not_closed = zero;
  not_closed[0] = var(3, 2) * var(3, 0);
  REQUIRE_FALSE(is_zero(dc_via_forms(ctx, 1, not_closed)));
  CHECK_THROWS_AS(poincare_quotient(ctx, point, 1, not_closed, 1, 2, 2, 4), std::invalid_argument);
  const auto om = dc_via_forms(ctx, 0, {var(3, 0) * var(3, 1) + var(3, 2)});
  const auto rep = poincare_quotient(ctx, point, 1, om, 1, 2, 2, 4);
  CHECK(std::isfinite(rep.ratio));
  CHECK(rep.ratio > 0);
  CHECK(rep.admissible);
  CHECK_FALSE(poincare_admissible(1, 1, 2, 8));
  CHECK(poincare_admissible(1, 2, 2, 8));
  CHECK(poincare_scaling_exponent(1, 1, 2, 4) == doctest::Approx(0));
  CHECK(poincare_scaling_exponent(1, 2, 2, 2) == doctest::Approx(2));
  const auto sc = poincare_scaling_probe(ctx, point, 1, om, {make_rational(1, 2), Rational(1)}, 2, 2, 3);
  CHECK(sc.relative_error <= 0.02);
  const auto om2 = dc_via_forms(ctx, 1, {var(3, 0) * var(3, 0) * var(3, 1), var(3, 2)});
  const auto sc2 = poincare_scaling_probe(ctx, point, 2, om2, {make_rational(1, 2), Rational(1)}, 2, 2, 2);
  CHECK(sc2.expected_exponent == doctest::Approx(2));
  CHECK(sc2.relative_error <= 0.02);
}
