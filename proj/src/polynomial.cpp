#include "rumin/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rumin {

namespace {

void check_same(int a, int b)
{
  if (a != b) throw std::invalid_argument("polynomial: variable count mismatch");
}

}  // namespace

Polynomial Polynomial::constant(int nvars, const Rational& c)
{
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int k)
{
  if (k < 0 || k >= nvars) throw std::out_of_range("Polynomial::variable");
  Exponents e(nvars, 0);
  e[k] = 1;
  return monomial(e);
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& c)
{
  Polynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

Rational Polynomial::coefficient(const Exponents& e) const
{
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c)
{
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("add_term: bad exponent length");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int Polynomial::degree() const
{
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

int Polynomial::weighted_degree(const std::vector<int>& weights) const
{
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int w = 0;
    for (std::size_t k = 0; k < e.size(); ++k) w += weights[k] * e[k];
    d = std::max(d, w);
  }
  return d;
}

bool Polynomial::is_homogeneous(const std::vector<int>& weights) const
{
  int first = -1;
  for (const auto& [e, c] : terms_) {
    int w = 0;
    for (std::size_t k = 0; k < e.size(); ++k) w += weights[k] * e[k];
    if (first < 0) first = w;
    else if (w != first) return false;
  }
  return true;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
  if (o.is_zero()) return *this;
  if (is_zero() && nvars_ == 0) nvars_ = o.nvars_;
  check_same(nvars_, o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
  if (o.is_zero()) return *this;
  if (is_zero() && nvars_ == 0) nvars_ = o.nvars_;
  check_same(nvars_, o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
  Polynomial r(*this);
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
  Polynomial r(*this);
  r -= o;
  return r;
}

Polynomial Polynomial::operator-() const
{
  Polynomial r(*this);
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
  if (is_zero() || o.is_zero()) return Polynomial(std::max(nvars_, o.nvars_));
  check_same(nvars_, o.nvars_);
  Polynomial r(nvars_);
  Exponents e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const
{
  Polynomial r(*this);
  r *= c;
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const
{
  if (is_zero() && o.is_zero()) return true;
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

Polynomial Polynomial::partial(int k) const
{
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponents d = e;
    d[k] -= 1;
    r.add_term(d, c * e[k]);
  }
  return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& z) const
{
  if (static_cast<int>(z.size()) != nvars_) throw std::invalid_argument("evaluate: arity");
  Rational s(0);
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (int k = 0; k < nvars_; ++k) m *= rumin::pow(z[k], static_cast<unsigned>(e[k]));
    s += m;
  }
  return s;
}

CompiledPolynomial::CompiledPolynomial(const Polynomial& p) : nvars_(p.nvars())
{
  for (const auto& [e, c] : p.terms()) {
    exps_.insert(exps_.end(), e.begin(), e.end());
    coefs_.push_back(c.get_d());
  }
}

double CompiledPolynomial::operator()(const double* z) const
{
  double s = 0;
  for (std::size_t i = 0; i < coefs_.size(); ++i) {
    double m = coefs_[i];
    const int* e = &exps_[i * nvars_];
    for (int k = 0; k < nvars_; ++k)
      for (int j = 0; j < e[k]; ++j) m *= z[k];
    s += m;
  }
  return s;
}

double Polynomial::evaluate(const std::vector<double>& z) const
{
  if (static_cast<int>(z.size()) != nvars_) throw std::invalid_argument("evaluate: arity");
  double s = 0;
  for (const auto& [e, c] : terms_) {
    double m = c.get_d();
    for (int k = 0; k < nvars_; ++k)
      for (int i = 0; i < e[k]; ++i) m *= z[k];
    s += m;
  }
  return s;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images) const
{
  if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("compose: arity");
  int target = -1;
  for (const auto& im : images) {
    if (im.nvars() == 0 && im.is_zero()) continue;
    if (target < 0) target = im.nvars();
    check_same(target, im.nvars());
  }
  if (target < 0) target = 0;
  // cache powers of each image
  std::vector<std::vector<Polynomial>> powers(nvars_);
  for (int k = 0; k < nvars_; ++k) powers[k].push_back(Polynomial::constant(target, 1));
  Polynomial r(target);
  for (const auto& [e, c] : terms_) {
    Polynomial m = Polynomial::constant(target, c);
    for (int k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      auto& pk = powers[k];
      Polynomial img = images[k].is_zero() ? Polynomial(target) : images[k];
      while (static_cast<int>(pk.size()) <= e[k]) pk.push_back(pk.back() * img);
      m = m * pk[e[k]];
      if (m.is_zero()) break;
    }
    r += m;
  }
  return r;
}

Polynomial Polynomial::remap(int new_nvars, const std::vector<int>& map) const
{
  if (static_cast<int>(map.size()) != nvars_) throw std::invalid_argument("remap: arity");
  Polynomial r(new_nvars);
  for (const auto& [e, c] : terms_) {
    Exponents ne(new_nvars, 0);
    for (int k = 0; k < nvars_; ++k) ne[map[k]] += e[k];
    r.add_term(ne, c);
  }
  return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const
{
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    const Rational a = abs(c);
    bool constant = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
    if (constant || a != 1) os << a.get_str();
    bool need_star = constant || a != 1;
    for (int k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      if (need_star) os << "*";
      need_star = true;
      os << (names.empty() ? "z" + std::to_string(k) : names[k]);
      if (e[k] > 1) os << "^" << e[k];
    }
  }
  return os.str();
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

Polynomial pow(const Polynomial& p, int e)
{
  Polynomial r = Polynomial::constant(p.nvars(), 1);
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

std::vector<std::string> heisenberg_variable_names(int n)
{
  std::vector<std::string> names;
  if (n == 1) return {"x", "y", "t"};
  for (int j = 1; j <= n; ++j) names.push_back("x" + std::to_string(j));
  for (int j = 1; j <= n; ++j) names.push_back("y" + std::to_string(j));
  names.push_back("t");
  return names;
}

std::vector<int> heisenberg_weights(int n)
{
  std::vector<int> w(2 * n + 1, 1);
  w[2 * n] = 2;
  return w;
}

Polynomial derive(int field, const Polynomial& f)
{
  const int nv = f.nvars();
  if (nv % 2 == 0) throw std::invalid_argument("derive: expected 2n+1 variables");
  const int n = (nv - 1) / 2;
  if (field < 0 || field > 2 * n) throw std::out_of_range("derive: field index");
  const int t = 2 * n;
  if (field == t) return f.partial(t);
  const Polynomial dt = f.partial(t);
  if (field < n) {
    // X_j = ∂x_j − ½ y_j ∂t
    return f.partial(field) - Polynomial::variable(nv, n + field) * dt * make_rational(1, 2);
  }
  const int j = field - n;
  // Y_j = ∂y_j + ½ x_j ∂t
  return f.partial(field) + Polynomial::variable(nv, j) * dt * make_rational(1, 2);
}

Polynomial random_polynomial(int nvars, int max_degree, int terms, int coef_range,
                             std::mt19937_64& rng)
{
  std::uniform_int_distribution<int> coef(1, coef_range);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<int> var(0, nvars - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  Polynomial p(nvars);
  for (int i = 0; i < terms; ++i) {
    Exponents e(nvars, 0);
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) e[var(rng)] += 1;
    const int c = coef(rng) * (sign(rng) ? 1 : -1);
    p.add_term(e, Rational(c));
  }
  return p;
}

}  // namespace rumin
