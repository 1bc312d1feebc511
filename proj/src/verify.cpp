#include "rumin/verify.hpp"

#include <algorithm>
#include <sstream>

namespace rumin {

namespace {

CheckResult result(const std::string& name, int n, int h, bool ok, std::string detail = {})
{
  return CheckResult{name, n, h, ok, std::move(detail)};
}

std::string count_detail(std::size_t bad, std::size_t total, const char* what)
{
  std::ostringstream s;
  s << bad << " of " << total << " " << what;
  return s.str();
}

// Every entry is zero or homogeneous of degree d.
bool entries_homogeneous(const OperatorMatrix& A, int d, std::size_t* bad = nullptr)
{
  std::size_t b = 0;
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) {
      const EnvElement& e = A(i, j);
      if (!e.is_zero() && !homogeneous_degree(e).is_pure(d)) ++b;
    }
  if (bad) *bad = b;
  return b == 0;
}

std::string residual_detail(const OperatorMatrix& r)
{
  return r.is_zero() ? "exact zero" : count_detail(r.nonzero_entries(), r.rows() * r.cols(), "entries nonzero");
}

CheckResult identity_check(const std::string& name, int n, int h, const OperatorMatrix& lhs,
                           const OperatorMatrix& rhs)
{
  const OperatorMatrix r = lhs - rhs;
  return result(name, n, h, r.is_zero(), residual_detail(r));
}

std::mt19937_64 rng_for(const VerifyOptions& opt, int salt) { return std::mt19937_64(opt.seed * 7919u + salt); }

}  // namespace

std::vector<CheckResult> check_dc_squared(const RuminContext& ctx, const ComplexOperators& ops)
{
  std::vector<CheckResult> out;
  const int n = ctx.n();
  for (int h = 0; h + 1 <= 2 * n; ++h) {
    const OperatorMatrix sq = ops.dc[h + 1] * ops.dc[h];
    out.push_back(result("dc_squared", n, h, sq.is_zero(), residual_detail(sq)));
  }
  return out;
}

std::vector<CheckResult> check_delta_squared(const RuminContext& ctx, const ComplexOperators& ops)
{
  std::vector<CheckResult> out;
  const int n = ctx.n();
  for (int h = 2; h <= 2 * n + 1; ++h) {
    const OperatorMatrix sq = ops.delta[h - 1] * ops.delta[h];
    out.push_back(result("delta_squared", n, h, sq.is_zero(), residual_detail(sq)));
  }
  return out;
}

std::vector<CheckResult> check_dc_order(const RuminContext& ctx, const ComplexOperators& ops)
{
  std::vector<CheckResult> out;
  const int n = ctx.n();
  for (int h = 0; h <= 2 * n; ++h) {
    const OperatorMatrix& D = ops.dc[h];
    std::size_t inhomogeneous = 0, with_T = 0, word_mismatch = 0;
    entries_homogeneous(D, dc_order(n, h), &inhomogeneous);
    for (std::size_t i = 0; i < D.rows(); ++i)
      for (std::size_t j = 0; j < D.cols(); ++j) {
        const EnvElement& e = D(i, j);
        if (e.is_zero()) continue;
        if (h != n && e.contains_T()) ++with_T;
        const WordSum w = to_horizontal_words(e);
        if (!words_are_horizontal(w, n) || !(from_words(w, n) == e)) ++word_mismatch;
      }
    std::ostringstream s;
    s << "order " << D.max_order() << ", inhomogeneous " << inhomogeneous << ", T in PBW " << with_T
      << ", word mismatches " << word_mismatch;
    out.push_back(result("dc_order", n, h, inhomogeneous == 0 && with_T == 0 && word_mismatch == 0, s.str()));
  }
  return out;
}

std::vector<CheckResult> check_delta_order(const RuminContext& ctx, const ComplexOperators& ops)
{
  std::vector<CheckResult> out;
  const int n = ctx.n();
  for (int h = 1; h <= 2 * n + 1; ++h) {
    std::size_t bad = 0;
    entries_homogeneous(ops.delta[h], dc_order(n, h - 1), &bad);
    out.push_back(result("delta_order", n, h, bad == 0, count_detail(bad, ops.delta[h].nonzero_entries(), "entries off degree")));
  }
  return out;
}

CheckResult check_sub_laplacian(const RuminContext& ctx, const ComplexOperators& ops)
{
  const int n = ctx.n();
  EnvElement sum(n);
  for (int j = 0; j < 2 * n; ++j) sum += EnvElement::generator(n, j) * EnvElement::generator(n, j);
  const EnvElement lhs = -ops.laplacian[0](0, 0);
  const bool ok = lhs == sum;
  return result("sub_laplacian", n, 0, ok, ok ? "-Delta_0 = sum W_j^2" : "-Delta_0 = " + lhs.to_string());
}

std::vector<CheckResult> check_laplacian_structure(const RuminContext& ctx, const ComplexOperators& ops)
{
  std::vector<CheckResult> out;
  const int n = ctx.n();
  for (int h = 0; h <= 2 * n + 1; ++h) {
    const OperatorMatrix& L = ops.laplacian[h];
    std::size_t bad = 0;
    entries_homogeneous(L, laplacian_order(n, h), &bad);
    out.push_back(result("laplacian_order", n, h, bad == 0, count_detail(bad, L.nonzero_entries(), "entries off degree")));
    const auto& g = ctx.e0(h).gram;
    out.push_back(identity_check("laplacian_symmetric", n, h, weighted_adjoint(L, g, g), L));
  }
  return out;
}

std::vector<CheckResult> check_dc_commutation_literal(const RuminContext& ctx, const ComplexOperators& ops)
{
  std::vector<CheckResult> out;
  const int n = ctx.n();
  for (int h = 0; h <= 2 * n; ++h)
    out.push_back(identity_check("dc_laplacian_literal", n, h, ops.dc[h] * ops.laplacian[h],
                                 ops.laplacian[h + 1] * ops.dc[h]));
  return out;
}

std::vector<CheckResult> check_delta_commutation_literal(const RuminContext& ctx, const ComplexOperators& ops)
{
  std::vector<CheckResult> out;
  const int n = ctx.n();
  for (int h = 1; h <= 2 * n + 1; ++h)
    out.push_back(identity_check("delta_laplacian_literal", n, h, ops.delta[h] * ops.laplacian[h],
                                 ops.laplacian[h - 1] * ops.delta[h]));
  return out;
}

std::vector<CheckResult> check_laplacian_commutation(const RuminContext& ctx, const ComplexOperators& ops)
{
  std::vector<CheckResult> out;
  const int n = ctx.n();
  const auto& D = ops.dc;
  const auto& S = ops.delta;
  const auto& L = ops.laplacian;
  for (int h = 0; h <= 2 * n; ++h) {
    if (h == n - 1)
      out.push_back(identity_check("dc_laplacian_modified", n, h, L[n] * D[h], D[h] * S[n] * D[h] * L[h]));
    else if (h == n + 1)
      out.push_back(identity_check("dc_laplacian_modified", n, h, L[n + 2] * D[h] * S[n + 2] * D[h], D[h] * L[h]));
    else
      out.push_back(identity_check("dc_laplacian", n, h, D[h] * L[h], L[h + 1] * D[h]));
  }
  for (int h = 1; h <= 2 * n + 1; ++h) {
    if (h == n + 2)
      out.push_back(identity_check("delta_laplacian_modified", n, h, L[n + 1] * S[h], S[h] * D[n + 1] * S[h] * L[h]));
    else if (h == n)
      out.push_back(identity_check("delta_laplacian_modified", n, h, L[n - 1] * S[h] * D[n - 1] * S[h], S[h] * L[h]));
    else
      out.push_back(identity_check("delta_laplacian", n, h, S[h] * L[h], L[h - 1] * S[h]));
  }
  return out;
}

std::vector<CheckResult> check_matrix_vs_forms(const RuminContext& ctx, const VerifyOptions& opt)
{
  std::vector<CheckResult> out;
  const int n = ctx.n();
  auto rng = rng_for(opt, 11);
  for (int h = 0; h <= 2 * n; ++h) {
    int bad = 0;
    for (int s = 0; s < opt.samples; ++s) {
      const PolyVector u = random_e0_vector(ctx, h, opt.poly_degree, 3, 5, rng);
      if (!is_zero(build_dc(ctx, h).apply(u) - dc_via_forms(ctx, h, u))) ++bad;
    }
    out.push_back(result("dc_matrix_vs_forms", n, h, bad == 0, count_detail(bad, opt.samples, "samples differ")));
  }
  return out;
}

std::vector<CheckResult> check_commutator_structure(const RuminContext& ctx, const VerifyOptions& opt)
{
  std::vector<CheckResult> out;
  const int n = ctx.n();
  const int nv = 2 * n + 1;
  auto rng = rng_for(opt, 23);
  for (int h = 0; h <= 2 * n; ++h) {
    const int bound = h == n ? 1 : 0;
    int leibniz = 0, order = 0, zeta_order = 0, vertical = 0, max_seen = -1;
    for (int s = 0; s < opt.samples; ++s) {
      const Polynomial zeta = random_polynomial(nv, opt.poly_degree, 3, 5, rng);
      const CommutatorExpansion ex = commutator_with_function(ctx, h, zeta);
      std::vector<PolyVector> inputs;
      for (int k = 0; k < 2; ++k) inputs.push_back(random_e0_vector(ctx, h, opt.poly_degree, 3, 5, rng));
      for (const auto& u : inputs)
        if (!is_zero(ex.apply(u) - commutator_direct(ctx, h, zeta, u))) ++leibniz;
      if (!ex.horizontal_only()) ++vertical;
      if (ex.max_zeta_order() > bound + 1) ++zeta_order;
      const VectorOperator op = [&](const PolyVector& u) { return commutator_direct(ctx, h, zeta, u); };
      const int k = argument_order_by_commutators(op, n, inputs, bound + 1);
      max_seen = std::max(max_seen, k);
      if (k > bound) ++order;
    }
    std::ostringstream d;
    d << "argument order " << max_seen << " (bound " << bound << "), Leibniz mismatches " << leibniz
      << ", vertical words " << vertical << ", zeta order violations " << zeta_order;
    out.push_back(result("commutator_structure", n, h, leibniz == 0 && order == 0 && zeta_order == 0 && vertical == 0,
                         d.str()));
    // constants commute with d_c
    const Polynomial c = Polynomial::constant(nv, make_rational(3, 2));
    const PolyVector u = random_e0_vector(ctx, h, opt.poly_degree, 3, 5, rng);
    out.push_back(result("commutator_constant", n, h, is_zero(commutator_direct(ctx, h, c, u))));
  }
  return out;
}

std::vector<CheckResult> check_pullback_naturality(const RuminContext& ctx, const VerifyOptions& opt)
{
  std::vector<CheckResult> out;
  const int n = ctx.n();
  auto rng = rng_for(opt, 37);
  std::uniform_int_distribution<int> num(1, 5);
  for (int h = 0; h <= 2 * n; ++h) {
    int bad = 0;
    for (int s = 0; s < opt.samples; ++s) {
      const ExactPoint p = random_exact_point(n, 3, 3, rng);
      const Rational r = make_rational(num(rng), num(rng));
      const PolyVector u = random_e0_vector(ctx, h, opt.poly_degree, 3, 5, rng);
      const PolyVector a = pullback_e0(ctx, h + 1, p, r, dc_via_forms(ctx, h, u));
      const PolyVector b = dc_via_forms(ctx, h, pullback_e0(ctx, h, p, r, u));
      if (!is_zero(a - b)) ++bad;
    }
    out.push_back(result("pullback_naturality", n, h, bad == 0, count_detail(bad, opt.samples, "samples differ")));
  }
  return out;
}

std::vector<CheckResult> run_exact_suite(const RuminContext& ctx, const VerifyOptions& opt)
{
  const ComplexOperators ops = build_complex(ctx, opt.inject_delta_fault);
  std::vector<CheckResult> all;
  auto append = [&](std::vector<CheckResult> v) { all.insert(all.end(), v.begin(), v.end()); };
  append(check_dc_squared(ctx, ops));
  append(check_delta_squared(ctx, ops));
  append(check_dc_order(ctx, ops));
  append(check_delta_order(ctx, ops));
  all.push_back(check_sub_laplacian(ctx, ops));
  append(check_laplacian_structure(ctx, ops));
  append(check_laplacian_commutation(ctx, ops));
  append(check_matrix_vs_forms(ctx, opt));
  append(check_commutator_structure(ctx, opt));
  append(check_pullback_naturality(ctx, opt));
  if (opt.literal_commutation) {
    append(check_dc_commutation_literal(ctx, ops));
    append(check_delta_commutation_literal(ctx, ops));
  }
  return all;
}

bool all_passed(const std::vector<CheckResult>& r)
{
  return std::all_of(r.begin(), r.end(), [](const CheckResult& c) { return c.passed; });
}

}  // namespace rumin
