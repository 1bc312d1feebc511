#include "rumin/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace rumin {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0))
{
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& cols,
                                            std::size_t rows)
{
  RationalMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("from_columns: length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

RationalVector RationalMatrix::column(std::size_t c) const
{
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalMatrix RationalMatrix::transpose() const
{
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RationalMatrix::is_zero() const
{
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const
{
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const
{
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector: shape mismatch");
  RationalVector out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const
{
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("sum: shape mismatch");
  RationalMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const
{
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("difference: shape mismatch");
  RationalMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

bool RationalMatrix::operator==(const RationalMatrix& rhs) const
{
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m)
{
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && sgn(m(piv, col)) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(piv, c));
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

void make_primitive(RationalVector& v)
{
  mpz_class den = 1;
  for (const auto& x : v)
    if (sgn(x) != 0) den = lcm(den, x.get_den());
  mpz_class g = 0;
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    mpz_class num = x.get_num() * (den / x.get_den());
    g = gcd(g, num);
  }
  if (g == 0) return;
  for (auto& x : v) {
    x *= Rational(den);
    x /= Rational(g);
    x.canonicalize();
  }
}

}  // namespace

std::size_t rank(const RationalMatrix& m)
{
  RationalMatrix copy(m);
  return rref(copy).size();
}

std::vector<RationalVector> null_space(const RationalMatrix& m)
{
  RationalMatrix r(m);
  const auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RationalVector> column_space(const RationalMatrix& m)
{
  RationalMatrix r(m);
  const auto pivots = rref(r);
  std::vector<RationalVector> basis;
  for (auto p : pivots) basis.push_back(m.column(p));
  return basis;
}

std::vector<RationalVector> orthogonal_complement(const std::vector<RationalVector>& vectors,
                                                  std::size_t dim)
{
  if (vectors.empty()) {
    std::vector<RationalVector> all;
    for (std::size_t i = 0; i < dim; ++i) {
      RationalVector e(dim, Rational(0));
      e[i] = 1;
      all.push_back(std::move(e));
    }
    return all;
  }
  // Rows are the given vectors; the complement is the null space.
  RationalMatrix rows(vectors.size(), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) rows(i, j) = vectors[i][j];
  return null_space(rows);
}

std::vector<RationalVector> intersection(const std::vector<RationalVector>& a,
                                         const std::vector<RationalVector>& b, std::size_t dim)
{
  // (A^⊥ + B^⊥)^⊥ = A ∩ B
  auto ca = orthogonal_complement(a, dim);
  auto cb = orthogonal_complement(b, dim);
  ca.insert(ca.end(), cb.begin(), cb.end());
  return orthogonal_complement(ca, dim);
}

std::vector<RationalVector> orthogonalize(const std::vector<RationalVector>& vectors)
{
  std::vector<RationalVector> out;
  std::vector<Rational> norms;
  for (const auto& v : vectors) {
    RationalVector w = v;
    for (std::size_t k = 0; k < out.size(); ++k) {
      const Rational c = dot(w, out[k]) / norms[k];
      for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * out[k][i];
    }
    bool zero = true;
    for (const auto& x : w)
      if (sgn(x) != 0) zero = false;
    if (zero) continue;
    make_primitive(w);
    norms.push_back(dot(w, w));
    out.push_back(std::move(w));
  }
  return out;
}

RationalMatrix inverse(const RationalMatrix& m)
{
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("inverse: singular");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Rational dot(const RationalVector& a, const RationalVector& b)
{
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace rumin

namespace rumin {

RationalMatrix pseudo_inverse(const RationalMatrix& m)
{
  // full-rank factorisation m = C F, then m⁺ = Fᵀ (F Fᵀ)⁻¹ (Cᵀ C)⁻¹ Cᵀ
  const auto basis = column_space(m);
  if (basis.empty()) return RationalMatrix(m.cols(), m.rows());
  const RationalMatrix C = RationalMatrix::from_columns(basis, m.rows());
  const RationalMatrix Ct = C.transpose();
  const RationalMatrix CtC_inv = inverse(Ct * C);
  const RationalMatrix F = CtC_inv * (Ct * m);
  const RationalMatrix Ft = F.transpose();
  return Ft * inverse(F * Ft) * CtC_inv * Ct;
}

bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b,
               std::size_t dim)
{
  std::vector<RationalVector> all = a;
  all.insert(all.end(), b.begin(), b.end());
  const auto ra = rank(RationalMatrix::from_columns(a, dim));
  const auto rb = rank(RationalMatrix::from_columns(b, dim));
  const auto rab = rank(RationalMatrix::from_columns(all, dim));
  return ra == rb && rb == rab;
}

}  // namespace rumin
