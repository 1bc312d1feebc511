#pragma once

// Differential forms with coefficients in a ring C. Two coefficient kinds are
// used:
//   Polynomial  - an honest form Σ f_S ω_S on H^n;
//   EnvElement  - a generic form: coefficient P stands for the function P f for
//                 an unspecified f, so d acts on it by left multiplication.
// Coordinates follow masks_of_degree(n, h). In the invariant frame the basis is
// ω_S of the left-invariant coframe; in the Euclidean frame it is dx_S with
// dx_{2n} = dt.

#include "rumin/envelope.hpp"
#include "rumin/exterior.hpp"
#include "rumin/polynomial.hpp"

#include <stdexcept>
#include <type_traits>
#include <vector>

namespace rumin {

enum class Frame { invariant, euclidean };

template <class C>
struct CoefficientTraits;

template <>
struct CoefficientTraits<Polynomial> {
  static Polynomial zero(int n) { return Polynomial(2 * n + 1); }
  static Polynomial field(int n, int i, const Polynomial& c)
  {
    (void)n;
    return c.is_zero() ? c : derive(i, c);
  }
};

template <>
struct CoefficientTraits<EnvElement> {
  static EnvElement zero(int n) { return EnvElement(n); }
  static EnvElement field(int n, int i, const EnvElement& c)
  {
    return c.is_zero() ? c : EnvElement::generator(n, i) * c;
  }
};

template <class C>
class Form {
 public:
  Form() = default;
  Form(int n, int degree, Frame frame = Frame::invariant)
      : n_(n), degree_(degree), frame_(frame),
        coeffs_(degree >= 0 && degree <= 2 * n + 1 ? lambda_dimension(n, degree) : 0,
                CoefficientTraits<C>::zero(n))
  {
  }

  int n() const { return n_; }
  int degree() const { return degree_; }
  Frame frame() const { return frame_; }
  std::size_t size() const { return coeffs_.size(); }

  const C& operator[](std::size_t i) const { return coeffs_[i]; }
  C& operator[](std::size_t i) { return coeffs_[i]; }
  const C& at_mask(Mask m) const { return coeffs_.at(mask_index(n_, m)); }
  C& at_mask(Mask m) { return coeffs_.at(mask_index(n_, m)); }
  Mask mask(std::size_t i) const { return masks_of_degree(n_, degree_)[i]; }

  bool is_zero() const
  {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  Form& operator+=(const Form& o)
  {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  Form& operator-=(const Form& o)
  {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  Form operator+(const Form& o) const
  {
    Form r(*this);
    r += o;
    return r;
  }
  Form operator-(const Form& o) const
  {
    Form r(*this);
    r -= o;
    return r;
  }
  Form operator*(const Rational& c) const
  {
    Form r(*this);
    for (auto& v : r.coeffs_) v *= c;
    return r;
  }
  bool operator==(const Form& o) const
  {
    return n_ == o.n_ && degree_ == o.degree_ && frame_ == o.frame_ && coeffs_ == o.coeffs_;
  }

  void add(Mask m, const C& c)
  {
    if (mask_degree(m) != degree_) throw std::invalid_argument("Form::add: degree mismatch");
    coeffs_[mask_index(n_, m)] += c;
  }

 private:
  void check(const Form& o) const
  {
    if (n_ != o.n_ || degree_ != o.degree_ || frame_ != o.frame_)
      throw std::invalid_argument("Form: incompatible operands");
  }

  int n_ = 0;
  int degree_ = 0;
  Frame frame_ = Frame::invariant;
  std::vector<C> coeffs_;
};

using PolyForm = Form<Polynomial>;
using GenericForm = Form<EnvElement>;

// Order-0 linear map given by a rational matrix from Λ^h to Λ^{target}.
template <class C>
Form<C> apply_matrix(const RationalMatrix& M, const Form<C>& f, int target)
{
  Form<C> r(f.n(), target, f.frame());
  if (M.cols() != f.size() || M.rows() != r.size())
    throw std::invalid_argument("apply_matrix: shape mismatch");
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (f[j].is_zero()) continue;
    for (std::size_t i = 0; i < r.size(); ++i)
      if (sgn(M(i, j)) != 0) r[i] += f[j] * M(i, j);
  }
  return r;
}

// Constant covector times the unit coefficient.
template <class C>
Form<C> from_covector(const Covector& v, int degree, const C& unit)
{
  Form<C> r(v.n(), degree);
  for (const auto& [m, c] : v.terms()) r.add(m, unit * c);
  return r;
}

// Σ_S f_S v_S: pairing of the coefficients with a rational coordinate vector.
template <class C>
C pair_with(const Form<C>& f, const RationalVector& v)
{
  C s = CoefficientTraits<C>::zero(f.n());
  for (std::size_t i = 0; i < f.size(); ++i)
    if (sgn(v[i]) != 0 && !f[i].is_zero()) s += f[i] * v[i];
  return s;
}

// The three weight pieces of d in the invariant frame.
template <class C>
struct DParts {
  Form<C> d0, d1, d2;
};

// d = d0 + d1 + d2 where, on c ω_S,
//   d0 = c dω_S (algebraic, weight preserving),
//   d1 = Σ_{i<2n} (W_i c) ω_i ∧ ω_S,   d2 = (T c) θ ∧ ω_S.
template <class C>
DParts<C> split_d(const Form<C>& f)
{
  if (f.frame() != Frame::invariant) throw std::invalid_argument("split_d: invariant frame only");
  const int n = f.n();
  const int h = f.degree();
  DParts<C> out{Form<C>(n, h + 1), Form<C>(n, h + 1), Form<C>(n, h + 1)};
  if (h > 2 * n) return out;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const C& c = f[j];
    if (c.is_zero()) continue;
    const Mask S = f.mask(j);
    for (int i = 0; i <= 2 * n; ++i) {
      const Mask b = Mask(1) << i;
      const int s = wedge_sign(b, S);
      if (s == 0) continue;
      C wc = CoefficientTraits<C>::field(n, i, c);
      if (wc.is_zero()) continue;
      if (s < 0) wc = -wc;
      (i == 2 * n ? out.d2 : out.d1).add(b | S, wc);
    }
    const Covector dS = d_constant(Covector::basis(n, S));
    for (const auto& [m, v] : dS.terms()) out.d0.add(m, c * v);
  }
  return out;
}

// Euclidean frame: d(c dx_S) = Σ_k ∂_k c dx_k ∧ dx_S.
Form<Polynomial> exterior_d_euclidean(const Form<Polynomial>& f);

template <class C>
Form<C> exterior_d(const Form<C>& f)
{
  if (f.frame() == Frame::invariant) {
    auto p = split_d(f);
    return p.d0 + p.d1 + p.d2;
  }
  if constexpr (std::is_same_v<C, Polynomial>) return exterior_d_euclidean(f);
  throw std::invalid_argument("exterior_d: Euclidean frame needs polynomial coefficients");
}

// Changes frame for polynomial forms using
//   θ = dt − ½ Σ (x_j dy_j − y_j dx_j),   dt = θ + ½ Σ (x_j dy_j − y_j dx_j).
PolyForm to_euclidean(const PolyForm& f);
PolyForm to_invariant(const PolyForm& f);

PolyForm wedge(const PolyForm& a, const PolyForm& b);

// Coefficientwise substitution / multiplication helpers for polynomial forms.
PolyForm multiply(const Polynomial& g, const PolyForm& f);
PolyForm compose(const PolyForm& f, const std::vector<Polynomial>& images);

PolyForm random_poly_form(int n, int h, int max_degree, int terms, int coef_range,
                          std::mt19937_64& rng, Frame frame = Frame::invariant);

}  // namespace rumin
