#include "rumin/homotopy.hpp"
#include "rumin/json_io.hpp"
#include "rumin/probes.hpp"
#include "rumin/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>

using namespace rumin;

namespace {

// Exit codes: 0 ok, 1 exact failure, 2 numeric tolerance miss under --strict, 3 usage.
constexpr int exit_exact = 1;
constexpr int exit_numeric = 2;
constexpr int exit_usage = 3;

struct Config {
  int n = 1;
  int h = -1;
  double p = 2;
  double q = 2;
  double lambda = 2;
  int poly_degree = 3;
  int grid = 33;
  unsigned seed = 1;
  int samples = 10;
  bool strict = false;
  bool fault = false;
  bool literal = false;
  std::string json_path;
  std::string csv_path;
};

class Emitter {
 public:
  explicit Emitter(const std::string& path)
  {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot open " + path);
    }
  }
  void operator()(const Json& j)
  {
    const std::string line = j.dump();
    std::cout << line << '\n';
    if (file_) *file_ << line << '\n';
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void write_csv_file(const std::string& path, const std::vector<std::string>& header,
                    const std::vector<std::vector<double>>& rows)
{
  if (path.empty()) return;
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path);
  write_csv(os, header, rows);
}

std::vector<int> degrees_for(const Config& c, int lo, int hi)
{
  if (c.h >= 0) {
    if (c.h < lo || c.h > hi) throw CLI::ValidationError("--h", "degree out of range for this command");
    return {c.h};
  }
  std::vector<int> v;
  for (int h = lo; h <= hi; ++h) v.push_back(h);
  return v;
}

int cmd_basis(const Config& c, Emitter& out)
{
  RuminContext ctx(c.n);
  const auto dims = ctx.dimension_table();
  std::vector<std::size_t> oracle;
  long alternating = 0;
  bool duality = true;
  const int top = 2 * c.n + 1;
  for (int h = 0; h <= top; ++h) {
    oracle.push_back(e0_dimension_from_d0(c.n, h));
    alternating += (h % 2 ? -1 : 1) * static_cast<long>(dims[h]);
    duality = duality && dims[h] == dims[top - h];
  }
  out({{"record", "dimension_table"},
       {"n", c.n},
       {"dims", dims},
       {"rank_oracle", oracle},
       {"matches_oracle", dims == oracle},
       {"duality", duality},
       {"alternating_sum", alternating}});
  std::vector<std::vector<double>> rows;
  for (int h : degrees_for(c, 0, top)) {
    const Subspace& s = ctx.e0(h);
    Json basis = Json::array(), gram = Json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) {
      basis.push_back(s.element(i).to_string());
      gram.push_back(s.gram[i].get_str());
    }
    out({{"record", "e0_basis"}, {"n", c.n}, {"h", h}, {"dim", s.dim()}, {"basis", basis}, {"gram", gram}});
    rows.push_back({double(h), double(dims[h]), double(oracle[h])});
  }
  write_csv_file(c.csv_path, {"h", "dim_e0", "rank_oracle"}, rows);
  return dims == oracle && duality && alternating == 0 ? 0 : exit_exact;
}

int cmd_verify(const Config& c, const std::vector<int>& ns, Emitter& out)
{
  VerifyOptions opt;
  opt.seed = c.seed;
  opt.samples = c.samples;
  opt.poly_degree = c.poly_degree;
  opt.inject_delta_fault = c.fault;
  opt.literal_commutation = c.literal;
  bool ok = true;
  std::size_t total = 0, failed = 0;
  for (int n : ns) {
    RuminContext ctx(n);
    for (const auto& r : run_exact_suite(ctx, opt)) {
      if (c.h >= 0 && r.h >= 0 && r.h != c.h) continue;
      Json j{{"record", "check"}};
      j.update(check_to_json(r));
      out(j);
      ++total;
      if (!r.passed) {
        ++failed;
        ok = false;
      }
    }
  }
  out({{"record", "verify_summary"}, {"checks", total}, {"failed", failed}, {"delta_fault_injected", c.fault},
       {"exit_code", ok ? 0 : exit_exact}});
  return ok ? 0 : exit_exact;
}

Json poincare_row(const PoincareReport& r)
{
  return {{"record", "poincare_quotient"}, {"n", r.n},         {"h", r.h},
          {"p", r.p},                      {"q", r.q},         {"radius", r.radius},
          {"lambda", r.lambda},            {"norm_phi", r.norm_phi}, {"norm_omega", r.norm_omega},
          {"ratio", r.ratio},              {"admissible", r.admissible}, {"warning", r.warning}};
}

int cmd_homotopy(const Config& c, Emitter& out)
{
  if (c.n > 2) throw CLI::ValidationError("--n", "homotopy needs n <= 2 (ball quadrature)");
  if (!(c.lambda > 1)) throw CLI::ValidationError("--lambda", "must exceed 1");
  std::mt19937_64 rng(c.seed);
  RuminContext ctx(c.n);
  const ConvexDomain domain;
  const auto point = AveragingWeight::point_mass(c.n);
  const auto bump = AveragingWeight::bump_for(c.n, domain);
  int exact_failures = 0;

  for (const auto* psi : {&point, &bump}) {
    const char* wname = psi == &point ? "point_mass" : "bump";
    for (int k = 1; k <= std::min(3, 2 * c.n + 1); ++k) {
      int bad = 0;
      for (int s = 0; s < c.samples; ++s) {
        const PolyForm w = random_poly_form(c.n, k, c.poly_degree, 3, 5, rng, Frame::euclidean);
        if (!euclidean_homotopy_residual(*psi, w).is_zero()) ++bad;
      }
      exact_failures += bad;
      out({{"record", "euclidean_homotopy"}, {"n", c.n}, {"k", k}, {"weight", wname}, {"samples", c.samples},
           {"nonzero_residuals", bad}});
    }
    for (int k = 1; k <= 2 * c.n + 1; ++k) {
      int bad = 0;
      for (int s = 0; s < c.samples; ++s) {
        const PolyVector phi = random_e0_vector(ctx, k - 1, c.poly_degree, 3, 5, rng);
        const PolyVector om = dc_via_forms(ctx, k - 1, phi);
        const PolyForm K = rumin_homotopy_K(ctx, *psi, ctx.from_e0(k, om));
        if (!is_zero(dc_via_forms(ctx, k - 1, ctx.to_e0(K)) - om)) ++bad;
      }
      exact_failures += bad;
      out({{"record", "rumin_homotopy"}, {"n", c.n}, {"k", k}, {"weight", wname}, {"samples", c.samples},
           {"nonzero_residuals", bad}});
    }
  }

  int misses = 0;
  std::vector<std::vector<double>> rows;
  for (int h : degrees_for(c, 1, 2 * c.n + 1)) {
    const bool admissible = poincare_admissible(c.n, h, c.p, c.q);
    if (!admissible)
      out({{"record", "warning"}, {"n", c.n}, {"h", h}, {"message", "exponents (p, q) inadmissible for this degree"}});
    const PolyVector phi = random_e0_vector(ctx, h - 1, c.poly_degree, 3, 5, rng);
    PolyVector om = dc_via_forms(ctx, h - 1, phi);
    if (is_zero(om)) continue;
    const auto rep = poincare_scaling_probe(ctx, point, h, om, {make_rational(1, 2), Rational(1)}, c.lambda, c.p,
                                            c.q, 20);
    for (const auto& r : rep.rows) {
      out(poincare_row(r));
      rows.push_back({double(h), c.p, c.q, r.radius, r.ratio, rep.fitted_exponent, rep.expected_exponent});
    }
    const bool pass = rep.relative_error <= 0.02;
    misses += !pass;
    out({{"record", "poincare_scaling"}, {"n", c.n}, {"h", h}, {"p", c.p}, {"q", c.q},
         {"fitted_exponent", rep.fitted_exponent}, {"expected_exponent", rep.expected_exponent},
         {"relative_error", rep.relative_error}, {"tolerance", 0.02}, {"within_tolerance", pass}});
  }
  write_csv_file(c.csv_path, {"h", "p", "q", "radius", "ratio", "fitted_exponent", "expected_exponent"}, rows);
  out({{"record", "homotopy_summary"}, {"exact_failures", exact_failures}, {"tolerance_misses", misses}});
  if (exact_failures) return exit_exact;
  return c.strict && misses ? exit_numeric : 0;
}

std::vector<int> resolutions_around(int grid)
{
  const int coarse = ((grid - 1) / 2) | 1;
  return {std::max(coarse, 9), grid, 2 * grid - 1};
}

int cmd_numeric(const Config& c, Emitter& out)
{
  if (c.n > 2) throw CLI::ValidationError("--n", "grid probes need n <= 2");
  if (c.grid < 9 || c.grid % 2 == 0) throw CLI::ValidationError("--grid", "odd resolution >= 9 required");
  int misses = 0;
  auto judge = [&](Json j, bool pass) {
    j["within_tolerance"] = pass;
    misses += !pass;
    out(j);
  };
  const int n = c.n;
  const int nv = 2 * n + 1;

  // discrete frame against symbolic derivation
  std::mt19937_64 rng(c.seed);
  // quartic in every coordinate so that no central difference is exact
  Polynomial u = random_polynomial(nv, c.poly_degree, 4, 5, rng);
  for (int k = 0; k < nv; ++k) {
    Exponents e(nv, 0);
    e[k] = k == nv - 1 ? 3 : 4;
    u += Polynomial::monomial(e);
  }
  std::vector<std::vector<double>> table;
  const auto conv_res = n == 1 ? resolutions_around(c.grid) : std::vector<int>{9, 13, 17};
  for (int f = 0; f <= 2 * n; ++f) {
    const auto r = derivative_convergence(u, n, f, conv_res, 1, Execution::parallel);
    for (std::size_t i = 0; i < r.resolutions.size(); ++i)
      table.push_back({double(f), double(r.resolutions[i]), r.spacings[i], r.errors[i], r.observed_order});
    judge({{"record", "derivative_convergence"}, {"n", n}, {"field", f}, {"resolutions", r.resolutions},
           {"errors", r.errors}, {"observed_order", r.observed_order}, {"min_order", 1.8}},
          r.observed_order >= 1.8);
  }
  write_csv_file(c.csv_path, {"field", "resolution", "spacing", "max_error", "observed_order"}, table);

  const GridSpec grid{n, 1, c.grid, c.grid};
  for (double mu : {1.0, 2.0}) {
    const auto d = decay_probe(n, mu, grid, {4, 8, 16, 32});
    judge({{"record", "kernel_decay"}, {"n", n}, {"mu", mu}, {"grid", c.grid}, {"radii", d.radii},
           {"values", d.values}, {"fitted_slope", d.fitted_slope}, {"expected_slope", d.expected_slope},
           {"relative_error", d.relative_error}, {"tolerance", 0.05}},
          d.relative_error <= 0.05);
  }

  const std::vector<double> lambdas{1, 2, 4};
  auto dilation_json = [&](const char* name, const DilationProbeReport& r, double tol) {
    judge({{"record", name}, {"n", n}, {"p", r.p}, {"q", r.q}, {"lambdas", r.lambdas}, {"ratios", r.ratios},
           {"spread", r.spread}, {"tolerance", tol}, {"dilation_adapted_grid", r.dilation_adapted},
           {"control_q", r.control_q}, {"control_ratios", r.control_ratios}, {"control_drift", r.control_drift},
           {"control_monotone", r.control_monotone}, {"singular_cells", r.stats.singular_cells}},
          r.spread <= tol && r.control_monotone);
  };
  const GridSpec probe_grid{n, 1, std::min(c.grid, n == 1 ? 33 : 13), std::min(c.grid, n == 1 ? 33 : 13)};
  try {
    dilation_json("lp_lq_probe", lp_lq_probe(n, 1, c.p, lambdas, probe_grid), 0.05);
    dilation_json("scalar_sobolev", scalar_sobolev_check(n, c.p, lambdas, grid), 0.02);
  } catch (const std::invalid_argument& e) {
    out({{"record", "warning"}, {"message", e.what()}});
  }

  for (double cw : {1.0, 16.0}) {
    const auto f = fundamental_solution_check(n, cw, n == 1 ? std::vector<int>{33, 49, 65} : std::vector<int>{13, 17, 21});
    out({{"record", "fundamental_candidate"}, {"n", n}, {"t_weight", cw}, {"resolutions", f.resolutions},
         {"residuals", f.residuals}, {"observed_order", f.observed_order}, {"harmonic", f.harmonic}});
  }

  const auto cc = convolution_checks(n, 1, probe_grid);
  out({{"record", "convolution_checks"}, {"n", n}, {"left_invariance_error", cc.left_invariance_error},
       {"derivative_error", cc.derivative_error}});
  const auto ks = kernel_split_check(n, 1, 0.5, n == 1 ? std::vector<int>{17, 25, 33} : std::vector<int>{9, 11, 13});
  const auto& d2 = ks.second_derivative_sup;
  const double growth = d2[d2.size() - 1] / d2[d2.size() - 2];
  judge({{"record", "kernel_split"}, {"n", n}, {"reconstruction_error", ks.reconstruction_error},
         {"tail_sup", ks.tail_sup}, {"resolutions", ks.resolutions}, {"second_derivative_sup", d2},
         {"last_refinement_growth", growth}, {"max_growth", 1.25}},
        ks.reconstruction_error < 1e-12 && std::isfinite(ks.tail_sup) && growth <= 1.25);

  out({{"record", "numeric_summary"}, {"tolerance_misses", misses}, {"strict", c.strict}});
  return c.strict && misses ? exit_numeric : 0;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Rumin complex on Heisenberg groups: construction, exact checks and grid probes"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  auto* n_opt = app.add_option("--n", c.n, "group index n")->check(CLI::Range(1, 3));
  app.add_option("--h", c.h, "restrict to one form degree");
  app.add_option("--p", c.p, "exponent p")->check(CLI::PositiveNumber);
  app.add_option("--q", c.q, "exponent q")->check(CLI::PositiveNumber);
  app.add_option("--lambda", c.lambda, "domain loss factor (> 1)");
  app.add_option("--poly-degree", c.poly_degree, "coordinate degree of random inputs")->check(CLI::Range(0, 8));
  app.add_option("--grid", c.grid, "grid resolution per axis (odd)");
  app.add_option("--seed", c.seed, "random seed");
  app.add_option("--samples", c.samples, "random inputs per check")->check(CLI::Range(1, 10000));
  app.add_flag("--strict", c.strict, "numeric tolerance misses give a nonzero exit");
  app.add_option("--json", c.json_path, "also write the JSON lines to this file");
  app.add_option("--csv", c.csv_path, "write the command's table as CSV");

  auto* basis = app.add_subcommand("basis", "E0 dimension table and bases");
  auto* verify = app.add_subcommand("verify", "exact identity suite (all n <= 3 unless --n is given)");
  verify->add_flag("--inject-delta-fault", c.fault, "flip the sign of one entry of every delta_c (test mode)");
  verify->add_flag("--literal-commutation", c.literal, "also check d_c Delta_h = Delta_{h+1} d_c at every h");
  auto* homotopy = app.add_subcommand("homotopy", "homotopy residuals and Poincare scaling probe");
  auto* numeric = app.add_subcommand("numeric", "grid experiments");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_usage;
  }

  try {
    Emitter out(c.json_path);
    if (*basis) return cmd_basis(c, out);
    if (*verify) {
      std::vector<int> ns{1, 2, 3};
      if (n_opt->count()) ns = {c.n};
      return cmd_verify(c, ns, out);
    }
    if (*homotopy) return cmd_homotopy(c, out);
    if (*numeric) return cmd_numeric(c, out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
