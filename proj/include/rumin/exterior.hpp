#pragma once

// Exterior algebra of the Heisenberg Lie algebra in the coframe
//   ω_0..ω_{2n} = dx_1..dx_n, dy_1..dy_n, θ.
// A basis covector ω_S is a bitmask S; bit 2n is θ.

#include "rumin/linalg.hpp"
#include "rumin/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rumin {

using Mask = std::uint32_t;

int mask_degree(Mask m);
// Definition of weight: 1 per horizontal factor, 2 for θ.
int mask_weight(Mask m, int n);
inline Mask theta_bit(int n) { return Mask(1) << (2 * n); }
inline bool is_horizontal_mask(Mask m, int n) { return (m & theta_bit(n)) == 0; }

// Sign of ω_A ∧ ω_B relative to ω_{A∪B}; 0 when A and B overlap.
int wedge_sign(Mask a, Mask b);

// All degree-h masks over 2n+1 letters, ordered lexicographically by their
// ascending index sequences. Position in this list is the coordinate index.
const std::vector<Mask>& masks_of_degree(int n, int h);
int mask_index(int n, Mask m);
std::size_t lambda_dimension(int n, int h);
std::string mask_name(int n, Mask m);

class Covector {
 public:
  using TermMap = std::map<Mask, Rational>;

  Covector() = default;
  explicit Covector(int n) : n_(n) {}
  static Covector basis(int n, Mask m, const Rational& c = Rational(1));
  static Covector one(int n) { return basis(n, 0); }

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(Mask m) const;
  void add_term(Mask m, const Rational& c);

  // Degree of the terms; -1 for zero, throws if terms have mixed degree.
  int degree() const;
  bool is_horizontal() const;
  // Split by pure weight.
  std::map<int, Covector> weight_components() const;

  Covector operator+(const Covector& o) const;
  Covector operator-(const Covector& o) const;
  Covector operator*(const Rational& c) const;
  bool operator==(const Covector& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  // Coordinates in masks_of_degree(n, h).
  RationalVector to_vector(int h) const;
  static Covector from_vector(int n, int h, const RationalVector& v);

  std::string to_string() const;

 private:
  int n_ = 0;
  TermMap terms_;
};

Covector wedge(const Covector& a, const Covector& b);
// Inner product making the basis ω_S orthonormal.
Rational inner(const Covector& a, const Covector& b);

// Structure constants c^k_{ij} with [W_i, W_j] = Σ_k c^k_{ij} W_k.
Rational structure_constant(int n, int i, int j, int k);
// dω^k = −Σ_{i<j} c^k_{ij} ω^i ∧ ω^j for a left-invariant coframe.
Covector d_coframe(int n, int k);
// Exterior derivative of a constant-coefficient covector (order-0 part of d).
Covector d_constant(const Covector& a);
// dθ restricted to the horizontal bundle.
Covector d_theta_horizontal(int n);

// L(β) = dθ|_H ∧ β; throws std::invalid_argument if β has a θ factor.
Covector lefschetz(const Covector& beta);
// Matrix of L^power from Λ^h H to Λ^{h+2·power} H, in horizontal coordinates.
RationalMatrix lefschetz_matrix(int n, int h, int power);
const std::vector<Mask>& horizontal_masks_of_degree(int n, int h);

// Matrix of d_0 : Λ^h → Λ^{h+1} in the masks_of_degree coordinates.
RationalMatrix d0_matrix(int n, int h);

struct Subspace {
  int n = 0;
  int degree = 0;
  std::vector<RationalVector> basis;  // orthogonal, primitive integer vectors
  std::vector<Rational> gram;         // |basis_i|^2

  std::size_t dim() const { return basis.size(); }
  Covector element(std::size_t i) const { return Covector::from_vector(n, degree, basis[i]); }
};

Subspace make_subspace(int n, int h, const std::vector<RationalVector>& spanning);

struct Spaces {
  Subspace V;
  Subspace W;
  Subspace E0;
};

inline constexpr int default_n_cap = 3;

// V^h, W^h from the Lefschetz description and E0^h = V^h ∩ ker d_0.
Spaces build_spaces(int n, int h, int n_cap = default_n_cap);

// dim E0^h from ranks of d_0 alone: dim ker d_0|Λ^h − rank d_0|Λ^{h−1}.
std::size_t e0_dimension_from_d0(int n, int h);

}  // namespace rumin
