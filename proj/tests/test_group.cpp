#include "rumin/operators.hpp"

#include <doctest.h>

#include <random>

using namespace rumin;

namespace {

ExactPoint ep(std::vector<Rational> x, std::vector<Rational> y, Rational t) { return ExactPoint(x, y, t); }

Rational q(long a, long b = 1) { return make_rational(a, b); }

}  // namespace

TEST_CASE("group law examples")
{
  const auto p = multiply(ep({q(1)}, {q(0)}, q(0)), ep({q(0)}, {q(1)}, q(0)));
  CHECK(p == ep({q(1)}, {q(1)}, q(1, 2)));

  std::mt19937_64 rng(3);
  for (int n = 1; n <= 3; ++n) {
    const auto a = random_exact_point(n, 9, 4, rng);
    const auto e = identity_point<Rational>(n);
    CHECK(multiply(a, e) == a);
    CHECK(multiply(e, a) == a);
    CHECK(multiply(a, inverse(a)) == e);
    CHECK(multiply(inverse(a), a) == e);
  }
  CHECK_THROWS_AS(multiply(ExactPoint(1), ExactPoint(2)), std::invalid_argument);
}

TEST_CASE("associativity and dilation automorphism on exact points")
{
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + i % 3;
    const auto a = random_exact_point(n, 7, 5, rng);
    const auto b = random_exact_point(n, 7, 5, rng);
    const auto c = random_exact_point(n, 7, 5, rng);
    REQUIRE(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    const Rational lam = q(1 + i % 4, 1 + i % 3);
    REQUIRE(dilate(lam, multiply(a, b)) == multiply(dilate(lam, a), dilate(lam, b)));
  }
}

TEST_CASE("gauge examples and homogeneity")
{
  CHECK(gauge(identity_point<double>(1)) == 0);
  CHECK(gauge(RealPoint({1.0}, {0.0}, 0.0)) == doctest::Approx(1));
  CHECK(gauge(RealPoint({0.0}, {0.0}, 1.0)) == doctest::Approx(1));
  CHECK(dilate(q(2), ep({q(1)}, {q(1)}, q(1))) == ep({q(2)}, {q(2)}, q(4)));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_exact_point(1 + i % 3, 9, 4, rng);
    if (p == identity_point<Rational>(p.n())) continue;
    // exact: ρ^4(δ_3 p) = 81 ρ^4(p)
    CHECK(gauge_fourth_power(dilate(q(3), p)) == 81 * gauge_fourth_power(p));
    CHECK(gauge(dilate(q(3), p)) / gauge(p) == doctest::Approx(3));
    CHECK(dilate(q(1), p) == p);
  }
  CHECK(Dilation<Rational>(q(2)).compose(Dilation<Rational>(q(3))).lambda() == 6);
  CHECK_THROWS_AS(Dilation<double>(0.0), std::invalid_argument);
  CHECK_THROWS_AS(Dilation<double>(-1.0), std::invalid_argument);
}

TEST_CASE("distance is left invariant and satisfies the triangle inequality on samples")
{
  std::mt19937_64 rng(11);
  const auto unit = RealPoint({1.0}, {0.0}, 0.0);
  CHECK(distance(identity_point<double>(1), unit) == doctest::Approx(1));
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + i % 3;
    const auto g = random_exact_point(n, 9, 4, rng);
    const auto a = random_exact_point(n, 9, 4, rng);
    const auto b = random_exact_point(n, 9, 4, rng);
    CHECK(distance_fourth_power(a, a) == 0);
    CHECK(distance_fourth_power(multiply(g, a), multiply(g, b)) == distance_fourth_power(a, b));
    CHECK(distance(a, b) <= distance(a, g) + distance(g, b) + 1e-12);
  }
}

TEST_CASE("balls use the gauge distance")
{
  const Ball<double> B(RealPoint({0.0}, {0.0}, 0.0), 1.0);
  CHECK(B.contains(RealPoint({0.5}, {0.5}, 0.5)));
  CHECK_FALSE(B.contains(RealPoint({0.0}, {0.0}, 1.0)));
  CHECK_THROWS_AS(Ball<double>(RealPoint(1), 0.0), std::invalid_argument);
}

TEST_CASE("gauge against the Euclidean norm near e")
{
  const auto pair = gauge_vs_euclidean(identity_point<double>(2));
  CHECK(pair.gauge == 0);
  CHECK(pair.euclidean == 0);
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 3; ++n) {
    const auto rep = sample_gauge_sandwich(n, 4000, 1.0, rng);
    CHECK(rep.upper_violations == 0);
    CHECK(std::isfinite(rep.c0_estimate));
    CHECK(rep.c0_estimate >= 1);
  }
}

TEST_CASE("left translation has unit Jacobian")
{
  // det of the Jacobian of q -> p·q, computed symbolically
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 2; ++n) {
    const int nv = 2 * n + 1;
    const auto p = random_exact_point(n, 5, 3, rng);
    const auto images = translation_dilation_map(p, Rational(1));
    std::vector<std::vector<Polynomial>> J(nv, std::vector<Polynomial>(nv));
    for (int i = 0; i < nv; ++i)
      for (int j = 0; j < nv; ++j) J[i][j] = images[i].partial(j);
    std::vector<int> perm(nv);
    for (int i = 0; i < nv; ++i) perm[i] = i;
    Polynomial det(nv);
    do {
      int inversions = 0;
      for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j) inversions += perm[i] > perm[j];
      Polynomial term = Polynomial::constant(nv, Rational(inversions % 2 ? -1 : 1));
      for (int i = 0; i < nv; ++i) term = term * J[i][perm[i]];
      det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(det == Polynomial::constant(nv, Rational(1)));
  }
}
