#include "rumin/envelope.hpp"
#include "rumin/polynomial.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace rumin;

namespace {

constexpr int N = 1;
constexpr int NV = 3;

Polynomial var(int k, int nv = NV) { return Polynomial::variable(nv, k); }
Polynomial cst(const Rational& c, int nv = NV) { return Polynomial::constant(nv, c); }
EnvElement X(int n = N) { return EnvElement::generator(n, 0); }
EnvElement Y(int n = N) { return EnvElement::generator(n, n); }
EnvElement T(int n = N) { return EnvElement::generator(n, 2 * n); }

// ∫ over [-1,1]^nv, exact
Rational box_integral(const Polynomial& p)
{
  Rational s = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational m = c;
    for (int k : e) m *= (k % 2) ? Rational(0) : make_rational(2, k + 1);
    s += m;
  }
  return s;
}

// Every monomial of total degree <= d in nv variables.
std::vector<Polynomial> monomials(int nv, int d)
{
  std::vector<Polynomial> out;
  Exponents e(nv, 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == nv) {
      out.push_back(Polynomial::monomial(e));
      return;
    }
    for (int i = 0; i <= left; ++i) {
      e[k] = i;
      rec(k + 1, left - i);
    }
    e[k] = 0;
  };
  rec(0, d);
  return out;
}

}  // namespace

TEST_CASE("frame derivations")
{
  CHECK(derive(2, var(2)) == cst(1));
  CHECK(derive(0, var(2)) == cst(make_rational(-1, 2)) * var(1));
  CHECK(derive(1, var(0) * var(2)) == cst(make_rational(1, 2)) * var(0) * var(0));
  CHECK(derive(0, cst(5)).is_zero());
}

TEST_CASE("polynomial arithmetic")
{
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_polynomial(NV, 3, 4, 5, rng);
    const auto b = random_polynomial(NV, 3, 4, 5, rng);
    const auto c = random_polynomial(NV, 3, 4, 5, rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    const auto ab = a * b;
    for (const auto& [e, coef] : ab.terms()) CHECK(sgn(coef) != 0);
  }
  const auto p = var(0) * var(2) + var(1);
  CHECK(p.degree() == 2);
  CHECK(p.weighted_degree(heisenberg_weights(1)) == 3);
  CHECK_FALSE(p.is_homogeneous(heisenberg_weights(1)));
  CHECK((var(0) * var(1) + var(2)).is_homogeneous(heisenberg_weights(1)));
}

TEST_CASE("compiled polynomials agree with exact evaluation")
{
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    const auto p = random_polynomial(5, 4, 6, 7, rng);
    const CompiledPolynomial cp(p);
    const std::vector<double> z{0.3, -1.2, 0.7, 2.0, -0.4};
    CHECK(cp(z.data()) == doctest::Approx(p.evaluate(z)).epsilon(1e-12));
  }
}

TEST_CASE("PBW products")
{
  CHECK(Y() * X() == X() * Y() - T());
  const EnvElement one = EnvElement::unit(N);
  std::mt19937_64 rng(3);
  const auto a = random_env_element(N, 3, 4, 5, rng);
  CHECK(one * a == a);
  CHECK(a * one == a);
  const EnvElement expected = X() * X() * Y() - X() * T();
  CHECK((X() * Y()) * X() == expected);
  CHECK(X() * (Y() * X()) == expected);
  CHECK(T() * X() == X() * T());
  CHECK(T() * Y() == Y() * T());
}

TEST_CASE("PBW confluence and action homomorphism")
{
  std::mt19937_64 rng(4);
  for (int n = 1; n <= 2; ++n) {
    const int nv = 2 * n + 1;
    for (int i = 0; i < 30; ++i) {
      const auto a = random_env_element(n, 2, 3, 4, rng);
      const auto b = random_env_element(n, 2, 3, 4, rng);
      const auto c = random_env_element(n, 2, 3, 4, rng);
      REQUIRE((a * b) * c == a * (b * c));
      const auto f = random_polynomial(nv, 5, 5, 5, rng);
      REQUIRE(act(a * b, f) == act(a, act(b, f)));
    }
  }
}

TEST_CASE("act examples")
{
  CHECK(act(T(), var(2) * var(2)) == cst(2) * var(2));
  for (const auto& m : monomials(NV, 5)) CHECK(act(X() * Y() - Y() * X(), m) == act(T(), m));
  // d(I) above the weighted degree kills the monomial
  const auto m = var(0) * var(1);  // weighted degree 2
  CHECK(act(X() * T(), m).is_zero());
  CHECK(act(X() * X() * Y(), m).is_zero());
}

TEST_CASE("action is faithful on low-degree monomials")
{
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    const auto a = random_env_element(N, 3, 4, 4, rng);
    // equal normal forms written differently, or a perturbation by one PBW term
    const auto b = i % 2 ? a + (X() * Y() - Y() * X() - T()) : a + EnvElement::basis({i % 3, i % 2, 1}, Rational(1));
    bool actions_agree = true;
    for (const auto& m : monomials(NV, 7)) actions_agree = actions_agree && act(a, m) == act(b, m);
    CHECK(actions_agree == (a == b));
  }
}

TEST_CASE("formal adjoint")
{
  CHECK(formal_adjoint(X()) == -X());
  CHECK(formal_adjoint(X() * Y()) == Y() * X());
  CHECK(formal_adjoint(X() * Y()) == X() * Y() - T());
  std::mt19937_64 rng(6);
  for (int i = 0; i < 30; ++i) {
    const auto a = random_env_element(N, 3, 4, 5, rng);
    const auto b = random_env_element(N, 3, 4, 5, rng);
    CHECK(formal_adjoint(formal_adjoint(a)) == a);
    CHECK(formal_adjoint(a * b) == formal_adjoint(b) * formal_adjoint(a));
  }
}

TEST_CASE("integration by parts against bump-weighted polynomials")
{
  // b vanishes to third order on the boundary of the box, enough for order <= 2
  Polynomial b = cst(1);
  for (int k = 0; k < NV; ++k) b = b * pow(cst(1) - var(k) * var(k), 3);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const auto a = random_env_element(N, 2, 3, 5, rng);
    const auto f = random_polynomial(NV, 2, 3, 5, rng) * b;
    const auto g = random_polynomial(NV, 2, 3, 5, rng) * b;
    CHECK(box_integral(act(a, f) * g) == box_integral(f * act(formal_adjoint(a), g)));
  }
}

TEST_CASE("homogeneous degree")
{
  CHECK(homogeneous_degree(X()).is_pure(1));
  CHECK(homogeneous_degree(T()).is_pure(2));
  CHECK(homogeneous_degree(X() + T()).kind == HomogeneousDegree::Kind::mixed);
  CHECK(homogeneous_degree(EnvElement(N)).kind == HomogeneousDegree::Kind::zero);
  MultiIndex I{1, 2, 3};
  CHECK(order(I) == 6);
  CHECK(homogeneity_degree(I) == 9);
  CHECK(homogeneity_degree(I) >= order(I));
}

TEST_CASE("horizontal word rewriting")
{
  std::mt19937_64 rng(8);
  for (int n = 1; n <= 2; ++n)
    for (int i = 0; i < 20; ++i) {
      const auto a = random_env_element(n, 3, 4, 5, rng);
      const WordSum w = to_horizontal_words(a);
      CHECK(words_are_horizontal(w, n));
      CHECK(from_words(w, n) == a);
    }
}
