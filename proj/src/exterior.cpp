#include "rumin/exterior.hpp"

#include <bit>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace rumin {

namespace {

std::mutex cache_mutex;

void collect(int letters, int h, int start, Mask current, std::vector<Mask>& out)
{
  if (h == 0) {
    out.push_back(current);
    return;
  }
  for (int i = start; i <= letters - h; ++i) collect(letters, h - 1, i + 1, current | (Mask(1) << i), out);
}

void check_n(int n)
{
  if (n < 1 || n > 12) throw std::invalid_argument("exterior: n out of supported range");
}

}  // namespace

int mask_degree(Mask m) { return std::popcount(m); }

int mask_weight(Mask m, int n) { return mask_degree(m) + ((m & theta_bit(n)) ? 1 : 0); }

int wedge_sign(Mask a, Mask b)
{
  if (a & b) return 0;
  // count pairs (i in a, j in b) with i > j
  int swaps = 0;
  for (Mask bb = b; bb; bb &= bb - 1) {
    const int j = std::countr_zero(bb);
    swaps += std::popcount(a >> (j + 1));
  }
  return swaps % 2 ? -1 : 1;
}

const std::vector<Mask>& masks_of_degree(int n, int h)
{
  check_n(n);
  static std::map<std::pair<int, int>, std::vector<Mask>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto key = std::make_pair(n, h);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Mask> out;
  if (h >= 0 && h <= 2 * n + 1) collect(2 * n + 1, h, 0, 0, out);
  return cache.emplace(key, std::move(out)).first->second;
}

const std::vector<Mask>& horizontal_masks_of_degree(int n, int h)
{
  check_n(n);
  static std::map<std::pair<int, int>, std::vector<Mask>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({n, h});
    if (it != cache.end()) return it->second;
  }
  std::vector<Mask> out;
  for (Mask m : masks_of_degree(n, h))
    if (is_horizontal_mask(m, n)) out.push_back(m);
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(std::make_pair(n, h), std::move(out)).first->second;
}

int mask_index(int n, Mask m)
{
  check_n(n);
  static std::map<int, std::vector<int>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second.at(m);
  }
  std::vector<int> index(std::size_t(1) << (2 * n + 1), -1);
  for (int h = 0; h <= 2 * n + 1; ++h) {
    const auto& ms = masks_of_degree(n, h);
    for (std::size_t i = 0; i < ms.size(); ++i) index[ms[i]] = static_cast<int>(i);
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(n, std::move(index)).first->second.at(m);
}

std::size_t lambda_dimension(int n, int h) { return masks_of_degree(n, h).size(); }

std::string mask_name(int n, Mask m)
{
  if (m == 0) return "1";
  std::string s;
  for (int i = 0; i <= 2 * n; ++i) {
    if (!(m & (Mask(1) << i))) continue;
    if (!s.empty()) s += "^";
    if (i == 2 * n) s += "theta";
    else if (i < n) s += n == 1 ? "dx" : "dx" + std::to_string(i + 1);
    else s += n == 1 ? "dy" : "dy" + std::to_string(i - n + 1);
  }
  return s;
}

Covector Covector::basis(int n, Mask m, const Rational& c)
{
  Covector v(n);
  v.add_term(m, c);
  return v;
}

Rational Covector::coefficient(Mask m) const
{
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Covector::add_term(Mask m, const Rational& c)
{
  if (m >> (2 * n_ + 1)) throw std::invalid_argument("Covector: mask outside Λ(h)");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int Covector::degree() const
{
  int d = -1;
  for (const auto& [m, c] : terms_) {
    const int k = mask_degree(m);
    if (d >= 0 && d != k) throw std::logic_error("Covector: mixed degree");
    d = k;
  }
  return d;
}

bool Covector::is_horizontal() const
{
  for (const auto& [m, c] : terms_)
    if (!is_horizontal_mask(m, n_)) return false;
  return true;
}

std::map<int, Covector> Covector::weight_components() const
{
  std::map<int, Covector> out;
  for (const auto& [m, c] : terms_) {
    auto [it, inserted] = out.try_emplace(mask_weight(m, n_), Covector(n_));
    it->second.add_term(m, c);
  }
  return out;
}

Covector Covector::operator+(const Covector& o) const
{
  Covector r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Covector Covector::operator-(const Covector& o) const
{
  Covector r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Covector Covector::operator*(const Rational& c) const
{
  Covector r(n_);
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  return r;
}

RationalVector Covector::to_vector(int h) const
{
  RationalVector v(lambda_dimension(n_, h), Rational(0));
  for (const auto& [m, c] : terms_) {
    if (mask_degree(m) != h) throw std::invalid_argument("Covector::to_vector: wrong degree");
    v[mask_index(n_, m)] = c;
  }
  return v;
}

Covector Covector::from_vector(int n, int h, const RationalVector& v)
{
  const auto& ms = masks_of_degree(n, h);
  if (v.size() != ms.size()) throw std::invalid_argument("Covector::from_vector: length");
  Covector c(n);
  for (std::size_t i = 0; i < ms.size(); ++i) c.add_term(ms[i], v[i]);
  return c;
}

std::string Covector::to_string() const
{
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.get_str() << ")" << mask_name(n_, m);
  }
  return os.str();
}

Covector wedge(const Covector& a, const Covector& b)
{
  if (a.n() != b.n()) throw std::invalid_argument("wedge: dimension mismatch");
  Covector r(a.n());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      const int s = wedge_sign(ma, mb);
      if (s != 0) r.add_term(ma | mb, ca * cb * s);
    }
  return r;
}

Rational inner(const Covector& a, const Covector& b)
{
  Rational s(0);
  for (const auto& [m, c] : a.terms()) s += c * b.coefficient(m);
  return s;
}

Rational structure_constant(int n, int i, int j, int k)
{
  const int t = 2 * n;
  if (k != t) return Rational(0);
  if (i < n && j == i + n) return Rational(1);   // [X_j, Y_j] = T
  if (j < n && i == j + n) return Rational(-1);  // [Y_j, X_j] = −T
  return Rational(0);
}

Covector d_coframe(int n, int k)
{
  Covector r(n);
  for (int i = 0; i <= 2 * n; ++i)
    for (int j = i + 1; j <= 2 * n; ++j) {
      const Rational c = structure_constant(n, i, j, k);
      if (sgn(c) != 0) r.add_term((Mask(1) << i) | (Mask(1) << j), -c);
    }
  return r;
}

Covector d_constant(const Covector& a)
{
  const int n = a.n();
  Covector r(n);
  for (const auto& [m, c] : a.terms()) {
    // d(ω_{s1} ∧ ... ∧ ω_{sk}) = Σ_p (−1)^p ω_{s1} ∧ ... dω_{sp} ... ∧ ω_{sk}
    int p = 0;
    for (Mask mm = m; mm; mm &= mm - 1, ++p) {
      const int s = std::countr_zero(mm);
      const Covector ds = d_coframe(n, s);
      if (ds.is_zero()) continue;
      const Mask before = m & ((Mask(1) << s) - 1);
      const Mask after = m & ~((Mask(2) << s) - 1);
      Covector term = wedge(wedge(Covector::basis(n, before), ds), Covector::basis(n, after));
      r = r + term * (p % 2 ? -c : c);
    }
  }
  return r;
}

Covector d_theta_horizontal(int n)
{
  Covector r(n);
  const Covector dtheta = d_coframe(n, 2 * n);
  for (const auto& [m, c] : dtheta.terms())
    if (is_horizontal_mask(m, n)) r.add_term(m, c);
  return r;
}

Covector lefschetz(const Covector& beta)
{
  if (!beta.is_horizontal()) throw std::invalid_argument("lefschetz: input has a θ component");
  return wedge(d_theta_horizontal(beta.n()), beta);
}

RationalMatrix lefschetz_matrix(int n, int h, int power)
{
  const auto& src = horizontal_masks_of_degree(n, h);
  const int target = h + 2 * power;
  const auto& dst = horizontal_masks_of_degree(n, target);
  RationalMatrix M(dst.size(), src.size());
  if (dst.empty()) return M;
  std::map<Mask, std::size_t> row;
  for (std::size_t i = 0; i < dst.size(); ++i) row[dst[i]] = i;
  for (std::size_t j = 0; j < src.size(); ++j) {
    Covector v = Covector::basis(n, src[j]);
    for (int p = 0; p < power; ++p) v = lefschetz(v);
    for (const auto& [m, c] : v.terms()) M(row.at(m), j) = c;
  }
  return M;
}

RationalMatrix d0_matrix(int n, int h)
{
  const auto& src = masks_of_degree(n, h);
  const std::size_t rows = lambda_dimension(n, h + 1);
  RationalMatrix M(rows, src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    const Covector img = d_constant(Covector::basis(n, src[j]));
    for (const auto& [m, c] : img.terms()) M(mask_index(n, m), j) = c;
  }
  return M;
}

Subspace make_subspace(int n, int h, const std::vector<RationalVector>& spanning)
{
  Subspace s;
  s.n = n;
  s.degree = h;
  s.basis = orthogonalize(spanning);
  for (const auto& v : s.basis) s.gram.push_back(dot(v, v));
  return s;
}

namespace {

// Horizontal coordinates (index into horizontal_masks_of_degree) to Λ^h coordinates.
RationalVector embed_horizontal(int n, int h, const RationalVector& hv)
{
  const auto& hm = horizontal_masks_of_degree(n, h);
  RationalVector v(lambda_dimension(n, h), Rational(0));
  for (std::size_t i = 0; i < hm.size(); ++i) v[mask_index(n, hm[i])] = hv[i];
  return v;
}

// θ ∧ β for β horizontal of degree h − 1, as Λ^h coordinates.
RationalVector theta_wedge(int n, int h, const RationalVector& hv)
{
  const auto& hm = horizontal_masks_of_degree(n, h - 1);
  RationalVector v(lambda_dimension(n, h), Rational(0));
  for (std::size_t i = 0; i < hm.size(); ++i) {
    if (sgn(hv[i]) == 0) continue;
    const Mask m = hm[i] | theta_bit(n);
    v[mask_index(n, m)] += hv[i] * wedge_sign(theta_bit(n), hm[i]);
  }
  return v;
}

std::vector<RationalVector> standard_basis(std::size_t dim)
{
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < dim; ++i) {
    RationalVector e(dim, Rational(0));
    e[i] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

Spaces build_spaces(int n, int h, int n_cap)
{
  if (n < 1 || n > n_cap) throw std::invalid_argument("build_spaces: n outside [1, cap]");
  if (h < 0 || h > 2 * n + 1) throw std::out_of_range("build_spaces: degree out of range");
  const std::size_t dim = lambda_dimension(n, h);

  std::vector<RationalVector> all_theta;
  if (h >= 1)
    for (const auto& e : standard_basis(horizontal_masks_of_degree(n, h - 1).size()))
      all_theta.push_back(theta_wedge(n, h, e));

  std::vector<RationalVector> V;
  if (h <= n) {
    // {α : L^{n−h+1}(α|_H) = 0}
    for (const auto& k : null_space(lefschetz_matrix(n, h, n - h + 1)))
      V.push_back(embed_horizontal(n, h, k));
  }
  V.insert(V.end(), all_theta.begin(), all_theta.end());

  std::vector<RationalVector> W;
  if (h <= n) {
    W = all_theta;
  } else {
    // θ ∧ Im(L^{h−n}) inside θ ∧ Λ^{h−1}H
    const int src = h - 1 - 2 * (h - n);
    if (src >= 0)
      for (const auto& c : column_space(lefschetz_matrix(n, src, h - n)))
        W.push_back(theta_wedge(n, h, c));
  }

  const auto ker_d0 = null_space(d0_matrix(n, h));
  const auto E0 = intersection(V, ker_d0, dim);

  Spaces s;
  s.V = make_subspace(n, h, V);
  s.W = make_subspace(n, h, W);
  s.E0 = make_subspace(n, h, E0);
  return s;
}

std::size_t e0_dimension_from_d0(int n, int h)
{
  const std::size_t dim = lambda_dimension(n, h);
  const std::size_t kernel = dim - rank(d0_matrix(n, h));
  const std::size_t image = h >= 1 ? rank(d0_matrix(n, h - 1)) : 0;
  return kernel - image;
}

}  // namespace rumin
