// One PASS/FAIL line per acceptance criterion. --expect-failures a,b,... makes the
// exit status 0 iff exactly the listed criteria fail.

#include "rumin/homotopy.hpp"
#include "rumin/probes.hpp"
#include "rumin/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>
#include <set>
#include <sstream>
#include <string>

using namespace rumin;

namespace {

constexpr double decay_tolerance = 0.05;
constexpr double lp_lq_tolerance = 0.05;
constexpr double sobolev_tolerance = 0.02;
constexpr double scaling_tolerance = 0.02;
constexpr int decay_grid = 65;
constexpr int dilation_grid = 33;

std::set<std::string> failed;

void report(const std::string& id, bool pass, const std::string& what, const std::string& detail)
{
  if (!pass) failed.insert(id);
  std::printf("%s %s: %s [%s]\n", pass ? "PASS" : "FAIL", id.c_str(), what.c_str(), detail.c_str());
  std::fflush(stdout);
}

int count_failed(const std::vector<CheckResult>& rs, std::ostringstream& d)
{
  int bad = 0;
  for (const auto& r : rs)
    if (!r.passed) {
      ++bad;
      d << " " << r.name << "(n=" << r.n << ",h=" << r.h << ")";
    }
  return bad;
}

const RuminContext& context(int n)
{
  static const RuminContext c1(1), c2(2), c3(3);
  return n == 1 ? c1 : n == 2 ? c2 : c3;
}

const ComplexOperators& complex_ops(int n)
{
  static const ComplexOperators o1 = build_complex(context(1)), o2 = build_complex(context(2)),
                                o3 = build_complex(context(3));
  return n == 1 ? o1 : n == 2 ? o2 : o3;
}

void criterion_1()
{
  std::ostringstream d;
  int bad = 0;
  std::size_t checks = 0;
  for (int n = 1; n <= 3; ++n) {
    const auto rs = check_dc_squared(context(n), complex_ops(n));
    checks += rs.size();
    bad += count_failed(rs, d);
  }
  d << checks << " degree pairs, " << bad << " nonzero";
  report("1", bad == 0, "d_c d_c = 0 exactly, n = 1, 2, 3", d.str());
}

void criterion_2()
{
  std::ostringstream d;
  int bad = 0;
  for (int n = 1; n <= 3; ++n) bad += count_failed(check_dc_order(context(n), complex_ops(n)), d);
  d << " violations " << bad;
  report("2", bad == 0, "d_c entries horizontal, homogeneous of degree 1 (h != n) or 2 (h = n)", d.str());
}

void criterion_3()
{
  std::ostringstream d;
  int bad = 0;
  for (int n = 1; n <= 3; ++n) bad += !check_sub_laplacian(context(n), complex_ops(n)).passed;
  const auto faulty = build_complex(context(1), true);
  const bool caught = !check_sub_laplacian(context(1), faulty).passed;
  d << "mismatches " << bad << ", sign fault detected " << (caught ? "yes" : "no");
  report("3", bad == 0 && caught, "-Delta_0 = sum W_j^2 exactly", d.str());
}

void criterion_4()
{
  std::ostringstream d, m;
  int bad = 0, bad_modified = 0;
  for (int n = 1; n <= 2; ++n) {
    bad += count_failed(check_dc_commutation_literal(context(n), complex_ops(n)), d);
    bad += count_failed(check_delta_commutation_literal(context(n), complex_ops(n)), d);
    bad_modified += count_failed(check_laplacian_commutation(context(n), complex_ops(n)), m);
  }
  d << " -> " << bad << " failing degree identities";
  report("4", bad == 0, "d_c Delta_h = Delta_{h+1} d_c and delta_c Delta_h = Delta_{h-1} delta_c literally, n <= 2",
         d.str());
  m << "failing " << bad_modified;
  report("4*", bad_modified == 0,
         "commutation with d_c delta_c d_c / delta_c d_c delta_c inserted at the middle degrees, n <= 2", m.str());
}

void criterion_5()
{
  std::ostringstream d;
  int bad = 0, zetas = 0;
  for (int n = 1; n <= 2; ++n) {
    VerifyOptions opt;
    opt.seed = 5;
    opt.samples = (100 + 2 * n) / (2 * n + 1);
    zetas += opt.samples * (2 * n + 1);
    bad += count_failed(check_commutator_structure(context(n), opt), d);
  }
  d << " " << zetas << " random zeta, failing degrees " << bad;
  report("5", bad == 0, "[d_c, zeta] has argument order 0 (h != n), <= 1 (h = n), no T zeta", d.str());
}

void criterion_6()
{
  std::mt19937_64 rng(6);
  int forms = 0, bad = 0;
  const auto point = AveragingWeight::point_mass(1);
  const auto bump = AveragingWeight::bump_for(1, ConvexDomain{});
  for (int s = 0; s < 100; ++s)
    for (const auto* psi : {&point, &bump}) {
      const int k = 1 + s % 3;
      const auto w = random_poly_form(1, k, 4, 3, 5, rng, Frame::euclidean);
      bad += !euclidean_homotopy_residual(*psi, w).is_zero();
      ++forms;
    }
  std::ostringstream d;
  d << forms << " forms, n = 1, k = 1..3, nonzero residuals " << bad;
  report("6", bad == 0, "omega - d K_Euc omega - K_Euc d omega = 0 (point mass and bump)", d.str());
}

void criterion_7()
{
  std::mt19937_64 rng(7);
  int inputs = 0, bad = 0;
  for (int n = 1; n <= 2; ++n) {
    const auto& ctx = context(n);
    const auto psi = AveragingWeight::bump_for(n, ConvexDomain{});
    for (int s = 0; s < 50; ++s) {
      const int k = 1 + s % (2 * n + 1);
      const auto phi = random_e0_vector(ctx, k - 1, 3, 3, 5, rng);
      const auto om = dc_via_forms(ctx, k - 1, phi);
      const auto K = ctx.to_e0(rumin_homotopy_K(ctx, psi, ctx.from_e0(k, om)));
      bad += !is_zero(dc_via_forms(ctx, k - 1, K) - om);
      ++inputs;
    }
  }
  std::ostringstream d;
  d << inputs << " closed inputs d_c phi, n = 1, 2, all degrees, nonzero residuals " << bad;
  report("7", bad == 0, "omega = d_c K omega on d_c-closed forms", d.str());
}

void criterion_8()
{
  std::mt19937_64 rng(8);
  std::ostringstream d;
  double worst = 0;
  int probes = 0;
  for (int n = 1; n <= 2; ++n) {
    const auto& ctx = context(n);
    const auto psi = AveragingWeight::point_mass(n);
    for (int h = 1; h <= 2 * n + 1; ++h) {
      PolyVector om;
      do om = dc_via_forms(ctx, h - 1, random_e0_vector(ctx, h - 1, 3, 3, 5, rng));
      while (is_zero(om));
      const auto rep = poincare_scaling_probe(ctx, psi, h, om, {make_rational(1, 2), Rational(1)}, 2, 2, 3);
      worst = std::max(worst, rep.relative_error);
      d << " n" << n << "h" << h << ":" << rep.fitted_exponent << "/" << rep.expected_exponent;
      ++probes;
    }
  }
  d << "; worst relative error " << worst << " (tolerance " << scaling_tolerance << ")";
  report("8", worst <= scaling_tolerance, "Poincare quotient scales as r^{Q/q-Q/p+1} (+2 at h = n+1)", d.str());
}

void criterion_9()
{
  const GridSpec grid{1, 1, decay_grid, decay_grid};
  std::ostringstream d;
  bool ok = true;
  for (double mu : {1.0, 2.0}) {
    const auto r = decay_probe(1, mu, grid, {4, 8, 16, 32});
    ok = ok && r.relative_error <= decay_tolerance;
    d << " mu=" << mu << " slope " << r.fitted_slope << " (expected " << r.expected_slope << ")";
  }
  d << ", grid " << decay_grid << "^3, tolerance " << decay_tolerance;
  report("9", ok, "log-log slope of f * rho^{mu-Q} is mu - Q, n = 1", d.str());
}

void criterion_10()
{
  const GridSpec grid{1, 1, dilation_grid, dilation_grid};
  const std::vector<double> lambdas{1, 2, 4};
  const auto a = lp_lq_probe(1, 1, 2, lambdas, grid);
  const auto b = scalar_sobolev_check(1, 2, lambdas, grid);
  std::ostringstream d;
  d << "L^p-L^q spread " << a.spread << " (tol " << lp_lq_tolerance << "), control drift " << a.control_drift
    << (a.control_monotone ? " monotone" : " not monotone") << "; Sobolev spread " << b.spread << " (tol "
    << sobolev_tolerance << "), control drift " << b.control_drift
    << (b.control_monotone ? " monotone" : " not monotone");
  report("10", a.spread <= lp_lq_tolerance && b.spread <= sobolev_tolerance && a.control_monotone && b.control_monotone,
         "critical-exponent ratios invariant under dilations, lambda in {1,2,4}", d.str());
}

void criterion_11()
{
  std::ostringstream d;
  bool ok = true;
  for (int n = 1; n <= 3; ++n) {
    const int top = 2 * n + 1;
    long alt = 0;
    d << " n=" << n << ":";
    for (int h = 0; h <= top; ++h) {
      const std::size_t dim = context(n).dim_e0(h);
      ok = ok && dim == e0_dimension_from_d0(n, h) && dim == context(n).dim_e0(top - h);
      alt += (h % 2 ? -1 : 1) * static_cast<long>(dim);
      d << dim << (h < top ? "," : "");
    }
    ok = ok && alt == 0;
  }
  report("11", ok, "E0 dimensions match the rank oracle, duality, alternating sum 0", d.str());
}

}  // namespace

int main(int argc, char** argv)
{
  std::set<std::string> expected;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--expect-failures") == 0 && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      for (std::string id; std::getline(ss, id, ',');) expected.insert(id);
    } else {
      std::fprintf(stderr, "usage: %s [--expect-failures id,id,...]\n", argv[0]);
      return 3;
    }
  }
  const auto start = std::chrono::steady_clock::now();
  criterion_11();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%zu of 12 lines failed in %.1f s\n", failed.size(), secs);
  if (failed == expected) return 0;
  if (!expected.empty()) std::printf("failures differ from the expected set\n");
  return 1;
}
