#include "rumin/verify.hpp"

#include <doctest.h>

#include <random>

using namespace rumin;

namespace {

Polynomial var(int nv, int k) { return Polynomial::variable(nv, k); }
Polynomial cst(int nv, const Rational& c) { return Polynomial::constant(nv, c); }
Mask bit(int i) { return Mask(1) << i; }

const RuminContext& context(int n)
{
  static const RuminContext c1(1), c2(2), c3(3);
  return n == 1 ? c1 : n == 2 ? c2 : c3;
}

PolyVector unit_section(const RuminContext& ctx, int h, std::size_t j)
{
  const int nv = 2 * ctx.n() + 1;
  PolyVector u(ctx.dim_e0(h), Polynomial(nv));
  u[j] = cst(nv, 1);
  return u;
}

void require_all(const std::vector<CheckResult>& rs)
{
  for (const auto& r : rs) {
    INFO(r.name << " n=" << r.n << " h=" << r.h << " " << r.detail);
    CHECK(r.passed);
  }
}

}  // namespace

TEST_CASE("exterior derivative")
{
  const int nv = 3;
  PolyForm f(1, 0);
  f[0] = var(nv, 2);
  const PolyForm df = exterior_d(f);
  CHECK(df.at_mask(bit(0)) == cst(nv, make_rational(-1, 2)) * var(nv, 1));
  CHECK(df.at_mask(bit(1)) == cst(nv, make_rational(1, 2)) * var(nv, 0));
  CHECK(df.at_mask(bit(2)) == cst(nv, 1));
  PolyForm c(1, 0);
  c[0] = cst(nv, 7);
  CHECK(exterior_d(c).is_zero());
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 3; ++n)
    for (int h = 0; h + 2 <= 2 * n + 1; ++h) {
      const auto w = random_poly_form(n, h, 4, 3, 5, rng);
      CHECK(exterior_d(exterior_d(w)).is_zero());
      const auto e = random_poly_form(n, h, 4, 3, 5, rng, Frame::euclidean);
      CHECK(exterior_d(exterior_d(e)).is_zero());
      CHECK(to_invariant(exterior_d(e)) == exterior_d(to_invariant(e)));
    }
}

TEST_CASE("weight splitting of d")
{
  std::mt19937_64 rng(2);
  for (int n = 1; n <= 3; ++n) {
    const int nv = 2 * n + 1;
    PolyForm fdx(n, 1);
    fdx.add(bit(0), random_polynomial(nv, 3, 3, 5, rng));
    CHECK(split_d(fdx).d0.is_zero());
    for (int h = 0; h <= 2 * n; ++h) {
      const auto w = random_poly_form(n, h, 3, 3, 5, rng);
      const auto parts = split_d(w);
      CHECK(parts.d0 + parts.d1 + parts.d2 == exterior_d(w));
      const auto g = random_polynomial(nv, 2, 2, 4, rng);
      CHECK(split_d(multiply(g, w)).d0 == multiply(g, parts.d0));
      // one coframe term at a time: shifts 0, 1, 2
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].is_zero()) continue;
        PolyForm single(n, h);
        single[i] = w[i];
        const int base = mask_weight(w.mask(i), n);
        const auto p = split_d(single);
        const PolyForm* forms[3] = {&p.d0, &p.d1, &p.d2};
        for (int s = 0; s < 3; ++s)
          for (std::size_t k = 0; k < forms[s]->size(); ++k)
            if (!(*forms[s])[k].is_zero()) CHECK(mask_weight(forms[s]->mask(k), n) == base + s);
      }
      // d0² = 0 and d0 d1 + d1 d0 = 0
      const auto p = split_d(w);
      if (h + 2 <= 2 * n + 1) {
        CHECK(split_d(p.d0).d0.is_zero());
        CHECK((split_d(p.d0).d1 + split_d(p.d1).d0).is_zero());
      }
    }
    // d0(θ ∧ β) = dθ ∧ β for constant horizontal β
    for (int h = 0; h + 2 <= 2 * n + 1; ++h)
      for (Mask m : horizontal_masks_of_degree(n, h)) {
        const Covector beta = Covector::basis(n, m);
        const Covector lhs = d_constant(wedge(Covector::basis(n, theta_bit(n)), beta));
        CHECK(lhs == wedge(d_theta_horizontal(n), beta));
      }
  }
}

TEST_CASE("d0 inverse and the projector decomposition")
{
  for (int n = 1; n <= 3; ++n) {
    const auto& ctx = context(n);
    const int nv = 2 * n + 1;
    PolyForm dx(n, 1);
    dx.add(bit(0), cst(nv, 1));
    CHECK(ctx.d0_inverse(dx).is_zero());
    PolyForm dth = from_covector(d_theta_horizontal(n), 2, cst(nv, 1));
    PolyForm th(n, 1);
    th.add(theta_bit(n), cst(nv, 1));
    CHECK(ctx.d0_inverse(dth) == th);
    for (int h = 0; h <= 2 * n + 1; ++h) {
      const std::size_t dim = lambda_dimension(n, h);
      RationalMatrix sum = ctx.pi_e0(h);
      if (h <= 2 * n) sum = sum + ctx.d0_inverse_matrix(h) * ctx.d0(h);
      if (h >= 1) sum = sum + ctx.d0(h - 1) * ctx.d0_inverse_matrix(h - 1);
      CHECK(sum == RationalMatrix::identity(dim));
      if (h >= 2) CHECK((ctx.d0_inverse_matrix(h - 2) * ctx.d0_inverse_matrix(h - 1)).is_zero());
      CHECK(ctx.pi_e0(h) * ctx.pi_e0(h) == ctx.pi_e0(h));
    }
  }
}

TEST_CASE("projectors on forms")
{
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 3; ++n) {
    const auto& ctx = context(n);
    const int nv = 2 * n + 1;
    PolyForm th(n, 1);
    th.add(theta_bit(n), cst(nv, 1));
    CHECK(ctx.project_E(th).is_zero());
    CHECK(ctx.project_E0(th).is_zero());
    PolyForm dx(n, 1);
    dx.add(bit(0), cst(nv, 1));
    CHECK(ctx.project_E0(dx) == dx);
    PolyForm f(n, 0);
    f[0] = random_polynomial(nv, 4, 4, 5, rng);
    CHECK(ctx.project_E(f) == f);
    for (int h = 0; h <= 2 * n + 1; ++h) {
      const auto w = random_poly_form(n, h, 3, 3, 5, rng);
      const auto pw = ctx.project_E(w);
      CHECK(ctx.project_E(pw) == pw);
      CHECK(ctx.project_E0(ctx.project_E0(w)) == ctx.project_E0(w));
      const auto g = random_polynomial(nv, 2, 2, 4, rng);
      CHECK(ctx.project_E0(multiply(g, w)) == multiply(g, ctx.project_E0(w)));
      // Π_E0 Π_E (ξ_j f) = ξ_j f
      for (std::size_t j = 0; j < ctx.dim_e0(h); ++j) {
        PolyVector u(ctx.dim_e0(h), Polynomial(nv));
        u[j] = random_polynomial(nv, 3, 3, 5, rng);
        const PolyForm xi = ctx.from_e0(h, u);
        CHECK(ctx.project_E0(ctx.project_E(xi)) == xi);
      }
    }
  }
}

TEST_CASE("d_c in low degree")
{
  const auto& ctx = context(1);
  const auto& D = build_dc(ctx, 0);
  REQUIRE(D.rows() == 2);
  CHECK(D(0, 0) == EnvElement::generator(1, 0));
  CHECK(D(1, 0) == EnvElement::generator(1, 1));
  const auto S = build_delta_c(ctx, 1);
  const EnvElement X = EnvElement::generator(1, 0), Y = EnvElement::generator(1, 1);
  CHECK((S * D)(0, 0) == -(X * X + Y * Y));
  CHECK_THROWS_AS(build_dc(ctx, 3), std::out_of_range);
  CHECK_THROWS_AS(build_delta_c(ctx, 0), std::out_of_range);
}

TEST_CASE("complex identities for n = 1, 2, 3")
{
  for (int n = 1; n <= 3; ++n) {
    const auto& ctx = context(n);
    const auto ops = build_complex(ctx);
    require_all(check_dc_squared(ctx, ops));
    require_all(check_delta_squared(ctx, ops));
    require_all(check_dc_order(ctx, ops));
    require_all(check_delta_order(ctx, ops));
    const auto sub = check_sub_laplacian(ctx, ops);
    CHECK(sub.passed);
    require_all(check_laplacian_structure(ctx, ops));
    for (int h = 0; h <= 2 * n; ++h) CHECK(ops.dc[h].max_order() == dc_order(n, h));
    if (n <= 2) require_all(check_laplacian_commutation(ctx, ops));
  }
}

TEST_CASE("literal Laplacian commutation fails exactly at the exceptional degrees")
{
  for (int n = 1; n <= 2; ++n) {
    const auto& ctx = context(n);
    const auto ops = build_complex(ctx);
    for (const auto& r : check_dc_commutation_literal(ctx, ops)) CHECK(r.passed == (r.h != n - 1 && r.h != n + 1));
    for (const auto& r : check_delta_commutation_literal(ctx, ops)) CHECK(r.passed == (r.h != n && r.h != n + 2));
  }
}

TEST_CASE("sign fault in delta_c is detected")
{
  const auto& ctx = context(1);
  const auto ops = build_complex(ctx, true);
  CHECK_FALSE(check_sub_laplacian(ctx, ops).passed);
  VerifyOptions opt;
  opt.inject_delta_fault = true;
  opt.samples = 2;
  CHECK_FALSE(all_passed(run_exact_suite(ctx, opt)));
}

TEST_CASE("operator matrices match the projector formula")
{
  VerifyOptions opt;
  opt.samples = 5;
  for (int n = 1; n <= 2; ++n) require_all(check_matrix_vs_forms(context(n), opt));
}

TEST_CASE("commutator with a function")
{
  VerifyOptions opt;
  opt.samples = 4;
  for (int n = 1; n <= 2; ++n) require_all(check_commutator_structure(context(n), opt));

  // h ≠ n, ζ = x_1: multiplication by a constant matrix
  std::mt19937_64 rng(4);
  for (int n = 1; n <= 2; ++n) {
    const auto& ctx = context(n);
    const int nv = 2 * n + 1;
    const auto x1 = var(nv, 0);
    for (int h = 0; h <= 2 * n; ++h) {
      if (h == n) continue;
      const std::size_t cols = ctx.dim_e0(h), rows = ctx.dim_e0(h + 1);
      std::vector<PolyVector> M;
      for (std::size_t j = 0; j < cols; ++j) {
        M.push_back(commutator_direct(ctx, h, x1, unit_section(ctx, h, j)));
        for (const auto& p : M.back()) CHECK(p.degree() <= 0);
      }
      const auto u = random_e0_vector(ctx, h, 3, 3, 5, rng);
      PolyVector expected(rows, Polynomial(nv));
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) expected[i] += M[j][i] * u[j];
      CHECK(is_zero(commutator_direct(ctx, h, x1, u) - expected));
    }
  }
}

TEST_CASE("pull-back under translations and dilations")
{
  std::mt19937_64 rng(5);
  VerifyOptions opt;
  opt.samples = 4;
  for (int n = 1; n <= 2; ++n) {
    const auto& ctx = context(n);
    const int nv = 2 * n + 1;
    require_all(check_pullback_naturality(ctx, opt));
    for (int h = 0; h <= 2 * n + 1; ++h) {
      const auto u = random_e0_vector(ctx, h, 3, 3, 5, rng);
      CHECK(is_zero(pullback_e0(ctx, h, ExactPoint(n), Rational(1), u) - u));
      const auto p = random_exact_point(n, 3, 2, rng);
      const Rational r = make_rational(3, 2);
      const auto images = translation_dilation_map(p, r);
      const auto pu = pullback_e0(ctx, h, p, r, u);
      const Rational scale = pow(r, static_cast<unsigned>(e0_weight(n, h)));
      for (std::size_t j = 0; j < u.size(); ++j) CHECK(pu[j] == u[j].compose(images) * scale);
    }
    // d_c(u∘δ_λ) = λ^a (d_c u)∘δ_λ
    const Rational lam = make_rational(5, 3);
    const auto dil = translation_dilation_map(ExactPoint(n), lam);
    for (int h = 0; h <= 2 * n; ++h) {
      const auto u = random_e0_vector(ctx, h, 3, 3, 5, rng);
      PolyVector ud;
      for (const auto& c : u) ud.push_back(c.compose(dil));
      PolyVector rhs;
      for (const auto& c : dc_via_forms(ctx, h, u))
        rhs.push_back(c.compose(dil) * pow(lam, static_cast<unsigned>(dc_order(n, h))));
      CHECK(is_zero(dc_via_forms(ctx, h, ud) - rhs));
    }
  }
  CHECK_THROWS_AS(pullback_translation_dilation(ExactPoint(1), Rational(0), PolyForm(1, 0)), std::invalid_argument);
}
