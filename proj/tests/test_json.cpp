#include "rumin/json_io.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace rumin;

TEST_CASE("polynomial round trip")
{
  std::mt19937_64 rng(31);
  for (int s = 0; s < 20; ++s) {
    Polynomial p = random_polynomial(5, 4, 6, 9, rng) * make_rational(7, 3);
    const Json j = polynomial_to_json(p);
    CHECK(polynomial_from_json(5, Json::parse(j.dump())) == p);
  }
  CHECK(polynomial_from_json(3, polynomial_to_json(Polynomial(3))).is_zero());
}

TEST_CASE("envelope element round trip")
{
  const EnvElement X = EnvElement::generator(2, 0), Y = EnvElement::generator(2, 2);
  const EnvElement a = Y * X * Rational(make_rational(-5, 4)) + X;
  CHECK(env_from_json(2, Json::parse(env_to_json(a).dump())) == a);
  Rational big("123456789012345678901234567891/7");
  big.canonicalize();
  const EnvElement b = X * big;
  const Json jb = env_to_json(b);
  CHECK(jb[0]["denominator"] == big.get_den().get_str());
  CHECK(jb[0]["numerator"] == big.get_num().get_str());
  CHECK(env_from_json(2, jb) == b);
}

TEST_CASE("points and checks")
{
  const RealPoint p({0.1}, {-2.5}, 3e-7);
  CHECK(real_point_from_json(point_to_json(p)) == p);
  ExactPoint e(1);
  e.x[0] = make_rational(1, 3);
  e.t = -2;
  CHECK(exact_point_from_json(point_to_json(e)) == e);
  CheckResult c{"dc_squared", 1, 0, true, ""};
  const Json j = check_to_json(c);
  CHECK(j["status"] == "exact-zero");
  c.passed = false;
  CHECK(check_to_json(c)["status"] == "nonzero");
}

TEST_CASE("csv")
{
  std::ostringstream os;
  write_csv(os, {"a", "b"}, {{1, 0.5}, {2, 1.0 / 3}});
  CHECK(os.str() == "a,b\n1,0.5\n2,0.33333333333333331\n");
  CHECK_THROWS(write_csv(os, {"a"}, {{1, 2}}));
}
