#pragma once

// Dense exact linear algebra over the rationals. Sizes here never exceed
// dim Λ^k for n <= 3 (at most 35), so plain Gaussian elimination is fine.

#include "rumin/rational.hpp"

#include <cstddef>
#include <vector>

namespace rumin {

using RationalVector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  // Columns given as vectors of equal length.
  static RationalMatrix from_columns(const std::vector<RationalVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector column(std::size_t c) const;
  RationalMatrix transpose() const;
  bool is_zero() const;

  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalVector operator*(const RationalVector& v) const;
  RationalMatrix operator+(const RationalMatrix& rhs) const;
  RationalMatrix operator-(const RationalMatrix& rhs) const;
  bool operator==(const RationalMatrix& rhs) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t rank(const RationalMatrix& m);

// Basis of {v : m v = 0}.
std::vector<RationalVector> null_space(const RationalMatrix& m);

// Basis of the column space (a subset of the columns, in order).
std::vector<RationalVector> column_space(const RationalMatrix& m);

// Basis of the orthogonal complement of span(vectors) in Q^dim (standard inner product).
std::vector<RationalVector> orthogonal_complement(const std::vector<RationalVector>& vectors,
                                                  std::size_t dim);

// Basis of span(a) ∩ span(b).
std::vector<RationalVector> intersection(const std::vector<RationalVector>& a,
                                         const std::vector<RationalVector>& b, std::size_t dim);

// Gram-Schmidt without normalisation; zero vectors are dropped. Each output
// vector is rescaled to have coprime integer entries.
std::vector<RationalVector> orthogonalize(const std::vector<RationalVector>& vectors);

// Inverse of a square nonsingular matrix; throws std::domain_error if singular.
RationalMatrix inverse(const RationalMatrix& m);

Rational dot(const RationalVector& a, const RationalVector& b);

// Moore-Penrose pseudo-inverse: zero on the orthogonal complement of the
// column space, inverse of m from (ker m)^⊥ onto the column space.
RationalMatrix pseudo_inverse(const RationalMatrix& m);

bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b,
               std::size_t dim);

}  // namespace rumin
