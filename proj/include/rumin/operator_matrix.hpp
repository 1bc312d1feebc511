#pragma once

#include "rumin/envelope.hpp"
#include "rumin/polynomial.hpp"

#include <string>
#include <vector>

namespace rumin {

// Left-invariant operator E0^source -> E0^target in fixed E0 bases:
// (A u)_i = Σ_j A_ij u_j with A_ij in the enveloping algebra.
class OperatorMatrix {
 public:
  OperatorMatrix() = default;
  OperatorMatrix(int n, std::size_t rows, std::size_t cols, int source_degree = -1,
                 int target_degree = -1);
  static OperatorMatrix identity(int n, std::size_t dim, int degree = -1);

  int n() const { return n_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int source_degree() const { return source_; }
  int target_degree() const { return target_; }

  EnvElement& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const EnvElement& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  // this ∘ rhs
  OperatorMatrix operator*(const OperatorMatrix& rhs) const;
  OperatorMatrix operator+(const OperatorMatrix& rhs) const;
  OperatorMatrix operator-(const OperatorMatrix& rhs) const;
  OperatorMatrix operator*(const Rational& c) const;
  bool operator==(const OperatorMatrix& rhs) const;
  bool is_zero() const;

  // Action on a coefficient vector of polynomials.
  std::vector<Polynomial> apply(const std::vector<Polynomial>& u) const;

  // Highest order among entries (-1 when zero).
  int max_order() const;
  std::size_t nonzero_entries() const;

 private:
  void check_shape(const OperatorMatrix& o) const;

  int n_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int source_ = -1;
  int target_ = -1;
  std::vector<EnvElement> entries_;
};

// Adjoint with respect to the weighted pairings Σ_j g_j ∫ u_j v_j on source and
// target: (A*)_ji = (g^target_i / g^source_j) · formal_adjoint(A_ij).
OperatorMatrix weighted_adjoint(const OperatorMatrix& A, const std::vector<Rational>& source_gram,
                                const std::vector<Rational>& target_gram);

}  // namespace rumin
