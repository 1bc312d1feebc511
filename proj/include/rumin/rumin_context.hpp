#pragma once

// Per-n data of the Rumin complex: d_0, its pseudo-inverse, the projectors and
// the E0 bases, plus a cache for the operators built on top of them.

#include "rumin/exterior.hpp"
#include "rumin/forms.hpp"
#include "rumin/operator_matrix.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace rumin {

class RuminContext {
 public:
  explicit RuminContext(int n, int n_cap = default_n_cap);

  int n() const { return n_; }
  int top_degree() const { return 2 * n_ + 1; }

  const Spaces& spaces(int h) const { return spaces_.at(check(h)); }
  const Subspace& e0(int h) const { return spaces_.at(check(h)).E0; }
  std::size_t dim_e0(int h) const { return e0(h).dim(); }
  std::vector<std::size_t> dimension_table() const;

  // d_0 : Λ^h → Λ^{h+1} and d_0^{-1} : Λ^{h+1} → Λ^h
  const RationalMatrix& d0(int h) const { return d0_.at(check(h)); }
  const RationalMatrix& d0_inverse_matrix(int h) const { return d0inv_.at(check(h)); }
  const RationalMatrix& pi_e0(int h) const { return pi_e0_.at(check(h)); }

  template <class C>
  Form<C> d0_apply(const Form<C>& f) const
  {
    return apply_matrix(d0(f.degree()), f, f.degree() + 1);
  }

  // Lowers degree by one; zero form of degree 0 when applied in degree 0.
  template <class C>
  Form<C> d0_inverse(const Form<C>& f) const
  {
    const int h = f.degree();
    if (h == 0) return Form<C>(n_, 0);
    return apply_matrix(d0_inverse_matrix(h - 1), f, h - 1);
  }

  template <class C>
  Form<C> project_E0(const Form<C>& f) const
  {
    return apply_matrix(pi_e0(f.degree()), f, f.degree());
  }

  // Π_E = 1 − d_0^{-1} d − d d_0^{-1}
  template <class C>
  Form<C> project_E(const Form<C>& f) const
  {
    expect_invariant(f);
    Form<C> r = f;
    if (f.degree() < top_degree()) r -= d0_inverse(exterior_d(f));
    if (f.degree() > 0) r -= exterior_d(d0_inverse(f));
    return r;
  }

  // Σ_j u_j ξ_j
  template <class C>
  Form<C> from_e0(int h, const std::vector<C>& u) const
  {
    const Subspace& s = e0(h);
    if (u.size() != s.dim()) throw std::invalid_argument("from_e0: length mismatch");
    Form<C> f(n_, h);
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (u[j].is_zero()) continue;
      for (std::size_t k = 0; k < f.size(); ++k)
        if (sgn(s.basis[j][k]) != 0) f[k] += u[j] * s.basis[j][k];
    }
    return f;
  }

  // Coordinates ⟨f, ξ_j⟩ / g_j; exact for f with values in E0.
  template <class C>
  std::vector<C> to_e0(const Form<C>& f) const
  {
    const Subspace& s = e0(f.degree());
    std::vector<C> u;
    for (std::size_t j = 0; j < s.dim(); ++j) u.push_back(pair_with(f, s.basis[j]) * Rational(1 / s.gram[j]));
    return u;
  }

  // Operator cache used by the builders in operators.hpp.
  template <class Builder>
  const OperatorMatrix& cached(int kind, int h, Builder&& build) const
  {
    {
      std::lock_guard<std::mutex> lock(cache_mutex_);
      auto it = cache_.find({kind, h});
      if (it != cache_.end()) return it->second;
    }
    OperatorMatrix m = build();
    std::lock_guard<std::mutex> lock(cache_mutex_);
    return cache_.emplace(std::make_pair(kind, h), std::move(m)).first->second;
  }

 private:
  int check(int h) const
  {
    if (h < 0 || h > top_degree()) throw std::out_of_range("RuminContext: degree out of range");
    return h;
  }
  template <class C>
  static void expect_invariant(const Form<C>& f)
  {
    if (f.frame() != Frame::invariant) throw std::invalid_argument("RuminContext: invariant frame expected");
  }

  int n_;
  std::vector<Spaces> spaces_;
  std::vector<RationalMatrix> d0_;
  std::vector<RationalMatrix> d0inv_;
  std::vector<RationalMatrix> pi_e0_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<int, int>, OperatorMatrix> cache_;
};

}  // namespace rumin
