#pragma once

// Exact identity suite for one n. Every check is a yes/no statement about
// exact rational data; there are no tolerances here.

#include "rumin/operators.hpp"

#include <random>
#include <string>
#include <vector>

namespace rumin {

struct CheckResult {
  std::string name;
  int n = 0;
  int h = -1;  // -1 when the check is not tied to one degree
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  unsigned seed = 1;
  int samples = 10;       // random inputs per randomized check
  int poly_degree = 3;    // coordinate degree of random inputs
  bool inject_delta_fault = false;
  bool literal_commutation = false;  // also report d_cΔ_h = Δ_{h+1}d_c at every h
};

// d_{h+1} d_h = 0 for 0 <= h <= 2n−1.
std::vector<CheckResult> check_dc_squared(const RuminContext& ctx, const ComplexOperators& ops);
// δ_{h−1} δ_h = 0 for 2 <= h <= 2n+1.
std::vector<CheckResult> check_delta_squared(const RuminContext& ctx, const ComplexOperators& ops);
// h ≠ n: entries T-free in PBW form, homogeneous of degree 1. h = n: homogeneous of
// degree 2 and equal to their rewriting as words in X_j, Y_j alone.
std::vector<CheckResult> check_dc_order(const RuminContext& ctx, const ComplexOperators& ops);
// δ_c entries homogeneous of degree 2 exactly on E0^{n+1}, 1 elsewhere.
std::vector<CheckResult> check_delta_order(const RuminContext& ctx, const ComplexOperators& ops);
// −Δ_0 = Σ_j W_j².
CheckResult check_sub_laplacian(const RuminContext& ctx, const ComplexOperators& ops);
// Entries homogeneous of degree 4 at h ∈ {n, n+1}, 2 elsewhere; weighted-symmetric.
std::vector<CheckResult> check_laplacian_structure(const RuminContext& ctx, const ComplexOperators& ops);

// d_cΔ_h = Δ_{h+1}d_c at every h (literal form; false at h = n±1).
std::vector<CheckResult> check_dc_commutation_literal(const RuminContext& ctx, const ComplexOperators& ops);
// δ_cΔ_h = Δ_{h−1}δ_c at every h (literal form; false at h = n, n+2).
std::vector<CheckResult> check_delta_commutation_literal(const RuminContext& ctx, const ComplexOperators& ops);
// The literal identities where they hold, and at the exceptional degrees
//   Δ_n d_c = d_cδ_cd_c Δ_{n−1},   Δ_{n+2} d_cδ_cd_c = d_c Δ_{n+1},
//   Δ_{n+1} δ_c = δ_cd_cδ_c Δ_{n+2},   Δ_{n−1} δ_cd_cδ_c = δ_c Δ_n.
std::vector<CheckResult> check_laplacian_commutation(const RuminContext& ctx, const ComplexOperators& ops);

// Operator matrix action against the projector formula on random sections.
std::vector<CheckResult> check_matrix_vs_forms(const RuminContext& ctx, const VerifyOptions& opt);
// [d_c, ζ]: Leibniz expansion equals d_c(ζu) − ζd_cu, horizontal in ζ, argument order
// 0 (h ≠ n) or ≤ 1 (h = n) by nested commutators, ζ-order ≤ 1 or ≤ 2.
std::vector<CheckResult> check_commutator_structure(const RuminContext& ctx, const VerifyOptions& opt);
// f^♯ d_c = d_c f^♯ for f = τ_p ∘ δ_r.
std::vector<CheckResult> check_pullback_naturality(const RuminContext& ctx, const VerifyOptions& opt);

std::vector<CheckResult> run_exact_suite(const RuminContext& ctx, const VerifyOptions& opt);

bool all_passed(const std::vector<CheckResult>& r);

}  // namespace rumin
