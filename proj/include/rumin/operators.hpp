#pragma once

#include "rumin/group.hpp"
#include "rumin/rumin_context.hpp"

#include <functional>
#include <vector>

namespace rumin {

using PolyVector = std::vector<Polynomial>;

// d_c : E0^h → E0^{h+1}, 0 <= h <= 2n. Column j is Π_E0 d Π_E applied to the
// generic section f ξ_j, read off in the E0^{h+1} basis.
const OperatorMatrix& build_dc(const RuminContext& ctx, int h);

// δ_c : E0^h → E0^{h−1}, 1 <= h <= 2n+1, the weighted formal adjoint of d_c.
// inject_sign_fault flips the sign of one entry (test mode for the verifier).
OperatorMatrix build_delta_c(const RuminContext& ctx, int h, bool inject_sign_fault = false);

// Rumin Laplacian on E0^h with the squared terms at h = n and h = n+1.
const OperatorMatrix& build_laplacian(const RuminContext& ctx, int h);

// The whole family for one n, optionally with a corrupted δ_c.
struct ComplexOperators {
  std::vector<OperatorMatrix> dc;         // index h = 0..2n
  std::vector<OperatorMatrix> delta;      // index h = 1..2n+1 (entry 0 unused)
  std::vector<OperatorMatrix> laplacian;  // index h = 0..2n+1
};
ComplexOperators build_complex(const RuminContext& ctx, bool inject_delta_fault = false);

OperatorMatrix laplacian_from(int n, int h, const std::vector<OperatorMatrix>& dc,
                              const std::vector<OperatorMatrix>& delta,
                              const std::vector<std::size_t>& dims);

// Degree of homogeneity expected for d_c entries and Laplacian entries.
int dc_order(int n, int h);
int laplacian_order(int n, int h);

// d_c on polynomial E0 coordinates computed with forms (no operator matrix).
PolyVector dc_via_forms(const RuminContext& ctx, int h, const PolyVector& u);

// Leibniz expansion of [d_c, ζ] on E0^h. Each term reads
//   coef · (W_{zeta_word} ζ) · W_{arg_word} u_col   added to row.
struct CommutatorTerm {
  std::size_t row = 0;
  std::size_t col = 0;
  Word zeta_word;
  Word arg_word;
  Rational coef;
};

struct CommutatorExpansion {
  int n = 0;
  int h = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  Polynomial zeta;
  std::vector<CommutatorTerm> terms;

  PolyVector apply(const PolyVector& u) const;
  // Longest arg_word among terms; -1 when there are none.
  int argument_order() const;
  int max_zeta_order() const;
  // Every word uses only X_j, Y_j (never the letter T).
  bool horizontal_only() const;
  // Terms of argument order k only.
  CommutatorExpansion restricted_to_order(int k) const;
};

CommutatorExpansion commutator_with_function(const RuminContext& ctx, int h, const Polynomial& zeta);

// d_c(ζ u) − ζ d_c u computed directly.
PolyVector commutator_direct(const RuminContext& ctx, int h, const Polynomial& zeta,
                             const PolyVector& u);

using VectorOperator = std::function<PolyVector(const PolyVector&)>;

// Smallest k <= max_order such that all (k+1)-fold commutators with the
// coordinate multiplications vanish on the given inputs, or max_order+1.
int argument_order_by_commutators(const VectorOperator& op, int n, const std::vector<PolyVector>& inputs,
                                  int max_order);

// f^♯ for f = τ_p ∘ δ_r on invariant-frame polynomial forms:
// f^♯(c ω_S) = r^{w(S)} (c ∘ f) ω_S.
PolyForm pullback_translation_dilation(const ExactPoint& p, const Rational& r, const PolyForm& omega);
PolyVector pullback_e0(const RuminContext& ctx, int h, const ExactPoint& p, const Rational& r,
                       const PolyVector& u);

// Coordinates of τ_p ∘ δ_r as polynomials in (x, y, t).
std::vector<Polynomial> translation_dilation_map(const ExactPoint& p, const Rational& r);

// Weight of E0^h sections: h for h <= n, h+1 above.
int e0_weight(int n, int h);

PolyVector random_e0_vector(const RuminContext& ctx, int h, int max_degree, int terms, int coef_range,
                            std::mt19937_64& rng);

bool is_zero(const PolyVector& v);
PolyVector operator-(const PolyVector& a, const PolyVector& b);

}  // namespace rumin
