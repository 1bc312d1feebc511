#include "rumin/exterior.hpp"

#include <doctest.h>

#include <random>

using namespace rumin;

namespace {

Covector cv(int n, Mask m, long c = 1) { return Covector::basis(n, m, make_rational(c)); }

Mask bit(int i) { return Mask(1) << i; }

std::size_t span_rank(const std::vector<RationalVector>& vs, std::size_t dim)
{
  if (vs.empty()) return 0;
  return rank(RationalMatrix::from_columns(vs, dim));
}

std::vector<RationalVector> concat(std::vector<RationalVector> a, const std::vector<RationalVector>& b)
{
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

long binom(int n, int k)
{
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Covector random_covector(int n, int h, std::mt19937_64& rng)
{
  std::uniform_int_distribution<int> c(-4, 4);
  Covector v(n);
  for (Mask m : masks_of_degree(n, h)) v.add_term(m, make_rational(c(rng)));
  return v;
}

}  // namespace

TEST_CASE("wedge")
{
  const int n = 1;
  const Covector dx = cv(n, bit(0)), dy = cv(n, bit(1)), th = cv(n, bit(2));
  CHECK(wedge(dx, dx).is_zero());
  CHECK(wedge(dx, dy) == wedge(dy, dx) * Rational(-1));
  CHECK(wedge(wedge(dx, dy), th) == cv(n, 0b111));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 40; ++i) {
    const int m = 1 + i % 3;
    const int ha = i % 3, hb = (i / 3) % 3, hc = 1;
    const auto a = random_covector(m, ha, rng), b = random_covector(m, hb, rng), c = random_covector(m, hc, rng);
    CHECK(wedge(a, b) == wedge(b, a) * Rational((ha * hb) % 2 ? -1 : 1));
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("inner product and weights")
{
  const int n = 2;
  CHECK(inner(cv(n, theta_bit(n)), cv(n, theta_bit(n))) == 1);
  CHECK(inner(cv(n, bit(0)), cv(n, bit(2))) == 0);
  CHECK(mask_weight(theta_bit(n), n) == 2);
  CHECK(mask_weight(bit(0) | bit(3) | theta_bit(n), n) == 4);
  std::mt19937_64 rng(2);
  for (int h = 0; h <= 2 * n + 1; ++h) {
    const auto a = random_covector(n, h, rng);
    const auto b = random_covector(n, h, rng);
    CHECK(inner(a, b) == inner(b, a));
    if (!a.is_zero()) CHECK(inner(a, a) > 0);
    const auto pa = a.weight_components();
    const auto pb = b.weight_components();
    Covector sum(n);
    for (const auto& [w, part] : pa) sum = sum + part;
    CHECK(sum == a);
    for (const auto& [wa, x] : pa)
      for (const auto& [wb, y] : pb)
        if (wa != wb) CHECK(inner(x, y) == 0);
  }
}

TEST_CASE("Lefschetz operator")
{
  // dθ = −dx ∧ dy from [X, Y] = T
  CHECK(lefschetz(Covector::one(1)) == cv(1, 0b011, -1));
  CHECK(d_theta_horizontal(1) == cv(1, 0b011, -1));
  CHECK(lefschetz(cv(1, 0b011)).is_zero());
  CHECK_THROWS_AS(lefschetz(cv(1, theta_bit(1))), std::invalid_argument);
  for (int n = 1; n <= 3; ++n)
    for (int h = 0; h <= n - 1; ++h) {
      const auto L = lefschetz_matrix(n, h, n - h);
      CHECK(L.rows() == L.cols());
      CHECK(rank(L) == L.cols());
    }
}

TEST_CASE("E0 dimensions against independent oracles")
{
  const std::vector<std::vector<std::size_t>> expected{{1, 2, 2, 1}, {1, 4, 5, 5, 4, 1}, {1, 6, 14, 14, 14, 14, 6, 1}};
  for (int n = 1; n <= 3; ++n) {
    const int top = 2 * n + 1;
    long alternating = 0;
    for (int h = 0; h <= top; ++h) {
      const Spaces s = build_spaces(n, h);
      const std::size_t dim = s.E0.dim();
      CHECK(dim == e0_dimension_from_d0(n, h));
      CHECK(dim == expected[n - 1][h]);
      // primitive forms: C(2n, h) − C(2n, h−2) for h <= n, dual above
      const int k = h <= n ? h : top - h;
      CHECK(static_cast<long>(dim) == binom(2 * n, k) - binom(2 * n, k - 2));
      CHECK(dim == build_spaces(n, top - h).E0.dim());
      alternating += (h % 2 ? -1 : 1) * static_cast<long>(dim);
    }
    CHECK(alternating == 0);
  }
  CHECK_THROWS(build_spaces(1, 4));
  CHECK_THROWS(build_spaces(4, 1));
}

TEST_CASE("complements of ker d0 and Im d0")
{
  for (int n = 1; n <= 3; ++n)
    for (int h = 0; h <= 2 * n + 1; ++h) {
      const std::size_t dim = lambda_dimension(n, h);
      const Spaces s = build_spaces(n, h);
      const auto ker = null_space(d0_matrix(n, h));
      const auto img = h > 0 ? column_space(d0_matrix(n, h - 1)) : std::vector<RationalVector>{};
      CHECK(span_rank(concat(s.W.basis, ker), dim) == dim);
      CHECK(s.W.dim() + ker.size() == dim);
      CHECK(span_rank(concat(s.V.basis, img), dim) == dim);
      CHECK(s.V.dim() + img.size() == dim);
      CHECK(span_rank(concat(s.V.basis, s.W.basis), dim) == s.V.dim());
      CHECK(same_span(s.E0.basis, intersection(s.V.basis, ker, dim), dim));
      for (std::size_t i = 0; i < s.E0.dim(); ++i) {
        const Covector e = s.E0.element(i);
        if (h <= n) {
          CHECK(e.is_horizontal());
        } else {
          for (const auto& [m, c] : e.terms()) CHECK((m & theta_bit(n)) != 0);
          // θ ∧ β with L β = 0
          Covector beta(n);
          for (const auto& [m, c] : e.terms()) beta.add_term(m & ~theta_bit(n), c * wedge_sign(theta_bit(n), m & ~theta_bit(n)));
          CHECK(lefschetz(beta).is_zero());
        }
        for (std::size_t j = 0; j < i; ++j) CHECK(inner(e, s.E0.element(j)) == 0);
        CHECK(inner(e, e) == s.E0.gram[i]);
      }
    }
}

TEST_CASE("d0 examples")
{
  for (int n = 1; n <= 3; ++n) {
    // d0 θ = dθ
    const Covector th = cv(n, theta_bit(n));
    CHECK(d_constant(th) == d_theta_horizontal(n));
    CHECK(d_constant(cv(n, bit(0))).is_zero());
    for (int h = 0; h + 2 <= 2 * n + 1; ++h) CHECK((d0_matrix(n, h + 1) * d0_matrix(n, h)).is_zero());
  }
}
