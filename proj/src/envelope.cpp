#include "rumin/envelope.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rumin {

namespace {

void check_same(int a, int b)
{
  if (a != b) throw std::invalid_argument("EnvElement: Heisenberg dimension mismatch");
}

Rational binomial(int a, int k)
{
  if (k < 0 || k > a) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational factorial(int k)
{
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(r);
}

// Expansion of Y_j^b X_j^a = Σ_k k! C(a,k) C(b,k) (−T)^k X_j^{a−k} Y_j^{b−k}.
struct Reorder {
  int k;
  Rational coef;
};

std::vector<Reorder> swap_expansion(int b, int a)
{
  std::vector<Reorder> out;
  for (int k = 0; k <= std::min(a, b); ++k) {
    Rational c = factorial(k) * binomial(a, k) * binomial(b, k);
    if (k % 2 == 1) c = -c;
    out.push_back({k, c});
  }
  return out;
}

// Product of two PBW monomials, accumulated into out with weight c.
void multiply_monomials(const MultiIndex& A, const MultiIndex& B, const Rational& c, int n,
                        EnvElement& out)
{
  // A·B = X^{a} Y^{b} X^{a'} Y^{b'} T^{cA + cB}; reorder each Y_j^{b_j} X_j^{a'_j}.
  std::vector<std::vector<Reorder>> choices(n);
  for (int j = 0; j < n; ++j) choices[j] = swap_expansion(A[n + j], B[j]);

  std::vector<std::size_t> pick(n, 0);
  while (true) {
    MultiIndex I(2 * n + 1, 0);
    Rational coef = c;
    int t_power = A[2 * n] + B[2 * n];
    for (int j = 0; j < n; ++j) {
      const auto& r = choices[j][pick[j]];
      coef *= r.coef;
      I[j] = A[j] + B[j] - r.k;
      I[n + j] = A[n + j] - r.k + B[n + j];
      t_power += r.k;
    }
    I[2 * n] = t_power;
    out.add_term(I, coef);

    int j = 0;
    while (j < n) {
      if (++pick[j] < choices[j].size()) break;
      pick[j] = 0;
      ++j;
    }
    if (j == n) break;
  }
}

}  // namespace

int order(const MultiIndex& I) { return std::accumulate(I.begin(), I.end(), 0); }

int homogeneity_degree(const MultiIndex& I)
{
  return std::accumulate(I.begin(), I.end(), 0) + (I.empty() ? 0 : I.back());
}

EnvElement EnvElement::unit(int n) { return scalar(n, Rational(1)); }

EnvElement EnvElement::scalar(int n, const Rational& c)
{
  EnvElement e(n);
  e.add_term(MultiIndex(2 * n + 1, 0), c);
  return e;
}

EnvElement EnvElement::generator(int n, int field)
{
  if (field < 0 || field > 2 * n) throw std::out_of_range("EnvElement::generator");
  MultiIndex I(2 * n + 1, 0);
  I[field] = 1;
  return basis(I);
}

EnvElement EnvElement::basis(const MultiIndex& I, const Rational& c)
{
  if (I.size() % 2 == 0) throw std::invalid_argument("EnvElement::basis: expected 2n+1 exponents");
  EnvElement e(static_cast<int>(I.size() - 1) / 2);
  e.add_term(I, c);
  return e;
}

Rational EnvElement::coefficient(const MultiIndex& I) const
{
  auto it = terms_.find(I);
  return it == terms_.end() ? Rational(0) : it->second;
}

void EnvElement::add_term(const MultiIndex& I, const Rational& c)
{
  if (static_cast<int>(I.size()) != 2 * n_ + 1)
    throw std::invalid_argument("EnvElement::add_term: bad multi-index length");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(I, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

EnvElement& EnvElement::operator+=(const EnvElement& o)
{
  check_same(n_, o.n_);
  for (const auto& [I, c] : o.terms_) add_term(I, c);
  return *this;
}

EnvElement& EnvElement::operator-=(const EnvElement& o)
{
  check_same(n_, o.n_);
  for (const auto& [I, c] : o.terms_) add_term(I, -c);
  return *this;
}

EnvElement& EnvElement::operator*=(const Rational& c)
{
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [I, v] : terms_) v *= c;
  return *this;
}

EnvElement EnvElement::operator+(const EnvElement& o) const
{
  EnvElement r(*this);
  r += o;
  return r;
}

EnvElement EnvElement::operator-(const EnvElement& o) const
{
  EnvElement r(*this);
  r -= o;
  return r;
}

EnvElement EnvElement::operator-() const
{
  EnvElement r(*this);
  for (auto& [I, v] : r.terms_) v = -v;
  return r;
}

EnvElement EnvElement::operator*(const Rational& c) const
{
  EnvElement r(*this);
  r *= c;
  return r;
}

EnvElement EnvElement::operator*(const EnvElement& o) const
{
  check_same(n_, o.n_);
  EnvElement out(n_);
  for (const auto& [A, ca] : terms_)
    for (const auto& [B, cb] : o.terms_) multiply_monomials(A, B, ca * cb, n_, out);
  return out;
}

bool EnvElement::operator==(const EnvElement& o) const
{
  return n_ == o.n_ && terms_ == o.terms_;
}

int EnvElement::max_order() const
{
  int m = -1;
  for (const auto& [I, c] : terms_) m = std::max(m, order(I));
  return m;
}

bool EnvElement::contains_T() const
{
  for (const auto& [I, c] : terms_)
    if (I[2 * n_] > 0) return true;
  return false;
}

std::string EnvElement::to_string() const
{
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [I, c] : terms_) {
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    const Rational a = abs(c);
    const bool unit_word = order(I) == 0;
    if (unit_word || a != 1) os << a.get_str();
    for (int k = 0; k <= 2 * n_; ++k) {
      if (I[k] == 0) continue;
      std::string name;
      if (k < n_) name = n_ == 1 ? "X" : "X" + std::to_string(k + 1);
      else if (k < 2 * n_) name = n_ == 1 ? "Y" : "Y" + std::to_string(k - n_ + 1);
      else name = "T";
      os << name;
      if (I[k] > 1) os << "^" << I[k];
    }
  }
  return os.str();
}

EnvElement operator*(const Rational& c, const EnvElement& a) { return a * c; }

EnvElement env_multiply(const EnvElement& a, const EnvElement& b) { return a * b; }

Polynomial act(const EnvElement& a, const Polynomial& f)
{
  const int n = a.n();
  if (f.nvars() != 2 * n + 1 && !f.is_zero())
    throw std::invalid_argument("act: polynomial arity does not match H^n");
  Polynomial out(2 * n + 1);
  if (f.is_zero()) return out;
  for (const auto& [I, c] : a.terms()) {
    Polynomial g = f;
    // rightmost factor first: T, then Y_n..Y_1, then X_n..X_1
    for (int k = 2 * n; k >= 0 && !g.is_zero(); --k)
      for (int r = 0; r < I[k] && !g.is_zero(); ++r) g = derive(k, g);
    out += g * c;
  }
  return out;
}

EnvElement formal_adjoint(const EnvElement& a)
{
  const int n = a.n();
  EnvElement out(n);
  for (const auto& [I, c] : a.terms()) {
    // (W_1^{i_1} ... T^{i_{2n+1}})^* = (−1)^{|I|} T^{i_{2n+1}} ... W_1^{i_1}
    EnvElement prod = EnvElement::unit(n);
    for (int k = 2 * n; k >= 0; --k)
      for (int r = 0; r < I[k]; ++r) prod = prod * EnvElement::generator(n, k);
    if (order(I) % 2 == 1) prod = -prod;
    out += prod * c;
  }
  return out;
}

HomogeneousDegree homogeneous_degree(const EnvElement& a)
{
  HomogeneousDegree h;
  for (const auto& [I, c] : a.terms()) {
    const int d = homogeneity_degree(I);
    if (h.kind == HomogeneousDegree::Kind::zero) {
      h.kind = HomogeneousDegree::Kind::pure;
      h.degree = d;
    } else if (d != h.degree) {
      h.kind = HomogeneousDegree::Kind::mixed;
      return h;
    }
  }
  return h;
}

EnvElement commutator(const EnvElement& a, const EnvElement& b) { return a * b - b * a; }

WordSum to_horizontal_words(const EnvElement& a)
{
  const int n = a.n();
  WordSum out;
  if (n == 0) {
    for (const auto& [I, c] : a.terms()) out[Word{}] += c;
    return out;
  }
  for (const auto& [I, c] : a.terms()) {
    Word prefix;
    for (int k = 0; k < 2 * n; ++k)
      for (int r = 0; r < I[k]; ++r) prefix.push_back(k);
    // expand (X_1 Y_1 − Y_1 X_1)^{t}
    std::vector<std::pair<Word, Rational>> partial{{prefix, c}};
    for (int r = 0; r < I[2 * n]; ++r) {
      std::vector<std::pair<Word, Rational>> next;
      for (auto& [w, v] : partial) {
        Word w1 = w;
        w1.push_back(0);
        w1.push_back(n);
        next.emplace_back(std::move(w1), v);
        Word w2 = w;
        w2.push_back(n);
        w2.push_back(0);
        next.emplace_back(std::move(w2), -v);
      }
      partial = std::move(next);
    }
    for (auto& [w, v] : partial) {
      auto& slot = out[w];
      slot += v;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (sgn(it->second) == 0) it = out.erase(it);
    else ++it;
  }
  return out;
}

EnvElement from_words(const WordSum& words, int n)
{
  EnvElement out(n);
  for (const auto& [w, c] : words) {
    EnvElement prod = EnvElement::scalar(n, c);
    for (int letter : w) prod = prod * EnvElement::generator(n, letter);
    out += prod;
  }
  return out;
}

bool words_are_horizontal(const WordSum& words, int n)
{
  for (const auto& [w, c] : words)
    for (int letter : w)
      if (letter >= 2 * n) return false;
  return true;
}

EnvElement random_env_element(int n, int max_order, int terms, int coef_range,
                              std::mt19937_64& rng)
{
  std::uniform_int_distribution<int> coef(1, coef_range);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<int> letter(0, 2 * n);
  std::uniform_int_distribution<int> ord(0, max_order);
  EnvElement e(n);
  for (int i = 0; i < terms; ++i) {
    MultiIndex I(2 * n + 1, 0);
    const int o = ord(rng);
    for (int k = 0; k < o; ++k) I[letter(rng)] += 1;
    e.add_term(I, Rational(coef(rng) * (sign(rng) ? 1 : -1)));
  }
  return e;
}

}  // namespace rumin
