#pragma once

#include "rumin/rational.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace rumin {

using Exponents = std::vector<int>;

// Sparse multivariate polynomial with exact rational coefficients. Terms are
// kept in lexicographic order of exponent vectors; zero coefficients are never
// stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int k);
  static Polynomial monomial(const Exponents& e, const Rational& c = Rational(1));

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& c);

  // Total degree; -1 for the zero polynomial.
  int degree() const;
  // Max over terms of Σ weights[k]·e[k].
  int weighted_degree(const std::vector<int>& weights) const;
  // Both bounds equal when every term has the same weighted degree.
  bool is_homogeneous(const std::vector<int>& weights) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  bool operator==(const Polynomial& o) const;

  // ∂/∂z_k
  Polynomial partial(int k) const;

  Rational evaluate(const std::vector<Rational>& z) const;
  double evaluate(const std::vector<double>& z) const;

  // p(images[0], ..., images[nvars-1]); all images must share one variable count.
  Polynomial compose(const std::vector<Polynomial>& images) const;

  // Embed into a ring with more variables: variable k goes to index map[k].
  Polynomial remap(int new_nvars, const std::vector<int>& map) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_ = 0;
  TermMap terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

// Double-precision copy of a polynomial for repeated evaluation at many points.
class CompiledPolynomial {
 public:
  CompiledPolynomial() = default;
  explicit CompiledPolynomial(const Polynomial& p);
  double operator()(const double* z) const;
  bool is_zero() const { return coefs_.empty(); }

 private:
  int nvars_ = 0;
  std::vector<int> exps_;  // row-major, nvars_ per term
  std::vector<double> coefs_;
};

Polynomial pow(const Polynomial& p, int e);

// Coordinate names x1..xn, y1..yn, t (or x, y, t when n = 1).
std::vector<std::string> heisenberg_variable_names(int n);

// Dilation weights of the coordinates: 1 for x, y and 2 for t.
std::vector<int> heisenberg_weights(int n);

// Left-invariant frame W_0..W_{2n} = X_1..X_n, Y_1..Y_n, T acting as derivations
// on polynomials in the 2n+1 exponential coordinates:
//   X_j = ∂_{x_j} − ½ y_j ∂_t,  Y_j = ∂_{y_j} + ½ x_j ∂_t,  T = ∂_t.
Polynomial derive(int field, const Polynomial& f);

// Random polynomial with `terms` monomials of total degree <= max_degree and
// integer coefficients in [-coef_range, coef_range] \ {0}.
Polynomial random_polynomial(int nvars, int max_degree, int terms, int coef_range,
                             std::mt19937_64& rng);

}  // namespace rumin
