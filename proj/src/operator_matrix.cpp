#include "rumin/operator_matrix.hpp"

#include <stdexcept>

namespace rumin {

OperatorMatrix::OperatorMatrix(int n, std::size_t rows, std::size_t cols, int source_degree,
                               int target_degree)
    : n_(n), rows_(rows), cols_(cols), source_(source_degree), target_(target_degree),
      entries_(rows * cols, EnvElement(n))
{
}

OperatorMatrix OperatorMatrix::identity(int n, std::size_t dim, int degree)
{
  OperatorMatrix m(n, dim, dim, degree, degree);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = EnvElement::unit(n);
  return m;
}

void OperatorMatrix::check_shape(const OperatorMatrix& o) const
{
  if (n_ != o.n_ || rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("OperatorMatrix: shape mismatch");
}

OperatorMatrix OperatorMatrix::operator*(const OperatorMatrix& rhs) const
{
  if (n_ != rhs.n_ || cols_ != rhs.rows_) throw std::invalid_argument("OperatorMatrix: cannot compose");
  OperatorMatrix r(n_, rows_, rhs.cols_, rhs.source_, target_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const EnvElement& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const EnvElement& b = rhs(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  return r;
}

OperatorMatrix OperatorMatrix::operator+(const OperatorMatrix& rhs) const
{
  check_shape(rhs);
  OperatorMatrix r(*this);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] += rhs.entries_[k];
  return r;
}

OperatorMatrix OperatorMatrix::operator-(const OperatorMatrix& rhs) const
{
  check_shape(rhs);
  OperatorMatrix r(*this);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] -= rhs.entries_[k];
  return r;
}

OperatorMatrix OperatorMatrix::operator*(const Rational& c) const
{
  OperatorMatrix r(*this);
  for (auto& e : r.entries_) e *= c;
  return r;
}

bool OperatorMatrix::operator==(const OperatorMatrix& rhs) const
{
  return n_ == rhs.n_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

bool OperatorMatrix::is_zero() const
{
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

std::vector<Polynomial> OperatorMatrix::apply(const std::vector<Polynomial>& u) const
{
  if (u.size() != cols_) throw std::invalid_argument("OperatorMatrix::apply: length mismatch");
  std::vector<Polynomial> out(rows_, Polynomial(2 * n_ + 1));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) out[i] += act((*this)(i, j), u[j]);
  return out;
}

int OperatorMatrix::max_order() const
{
  int m = -1;
  for (const auto& e : entries_) m = std::max(m, e.max_order());
  return m;
}

std::size_t OperatorMatrix::nonzero_entries() const
{
  std::size_t c = 0;
  for (const auto& e : entries_)
    if (!e.is_zero()) ++c;
  return c;
}

OperatorMatrix weighted_adjoint(const OperatorMatrix& A, const std::vector<Rational>& source_gram,
                                const std::vector<Rational>& target_gram)
{
  if (source_gram.size() != A.cols() || target_gram.size() != A.rows())
    throw std::invalid_argument("weighted_adjoint: Gram sizes do not match");
  OperatorMatrix r(A.n(), A.cols(), A.rows(), A.target_degree(), A.source_degree());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (!A(i, j).is_zero()) r(j, i) = formal_adjoint(A(i, j)) * (target_gram[i] / source_gram[j]);
  return r;
}

}  // namespace rumin
