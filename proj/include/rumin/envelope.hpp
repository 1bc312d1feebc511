#pragma once

// Enveloping algebra of the Heisenberg Lie algebra, stored in the PBW basis
//   W^I = X_1^{i_1} ... X_n^{i_n} Y_1^{i_{n+1}} ... Y_n^{i_{2n}} T^{i_{2n+1}}.
// The only nontrivial bracket is [X_j, Y_j] = T, and T is central.

#include "rumin/polynomial.hpp"
#include "rumin/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace rumin {

using MultiIndex = std::vector<int>;

// |I| = Σ i_k
int order(const MultiIndex& I);
// d(I) = i_1 + ... + i_{2n} + 2 i_{2n+1}
int homogeneity_degree(const MultiIndex& I);

struct HomogeneousDegree {
  enum class Kind { zero, pure, mixed };
  Kind kind = Kind::zero;
  int degree = 0;

  bool is_pure(int d) const { return kind == Kind::pure && degree == d; }
};

class EnvElement {
 public:
  using TermMap = std::map<MultiIndex, Rational>;

  EnvElement() = default;
  explicit EnvElement(int n) : n_(n) {}

  static EnvElement unit(int n);
  static EnvElement scalar(int n, const Rational& c);
  // W_field for field in 0..2n (X_1..X_n, Y_1..Y_n, T).
  static EnvElement generator(int n, int field);
  static EnvElement basis(const MultiIndex& I, const Rational& c = Rational(1));

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const MultiIndex& I) const;
  void add_term(const MultiIndex& I, const Rational& c);

  EnvElement& operator+=(const EnvElement& o);
  EnvElement& operator-=(const EnvElement& o);
  EnvElement& operator*=(const Rational& c);
  EnvElement operator+(const EnvElement& o) const;
  EnvElement operator-(const EnvElement& o) const;
  EnvElement operator-() const;
  EnvElement operator*(const Rational& c) const;
  // PBW-normal product: (a*b) acts as a after b.
  EnvElement operator*(const EnvElement& o) const;
  bool operator==(const EnvElement& o) const;

  // Highest order |I| among terms; -1 for zero.
  int max_order() const;
  // True when some term carries a positive power of T.
  bool contains_T() const;

  std::string to_string() const;

 private:
  int n_ = 0;
  TermMap terms_;
};

EnvElement operator*(const Rational& c, const EnvElement& a);

EnvElement env_multiply(const EnvElement& a, const EnvElement& b);

// Differential operator action on a polynomial in the 2n+1 coordinates.
Polynomial act(const EnvElement& a, const Polynomial& f);

// Anti-automorphism extending W_i -> -W_i (the formal L^2 adjoint, since the
// frame fields are divergence free for Lebesgue measure).
EnvElement formal_adjoint(const EnvElement& a);

HomogeneousDegree homogeneous_degree(const EnvElement& a);

EnvElement commutator(const EnvElement& a, const EnvElement& b);

// Noncommutative polynomial in the frame letters 0..2n (letter 2n is T).
using Word = std::vector<int>;
using WordSum = std::map<Word, Rational>;

// Rewrites every T as X_1 Y_1 − Y_1 X_1, so the result only uses letters 0..2n-1.
WordSum to_horizontal_words(const EnvElement& a);
// Normal-ordered value of a word sum.
EnvElement from_words(const WordSum& words, int n);
bool words_are_horizontal(const WordSum& words, int n);

// Random element with integer coefficients; orders up to max_order.
EnvElement random_env_element(int n, int max_order, int terms, int coef_range,
                              std::mt19937_64& rng);

}  // namespace rumin
