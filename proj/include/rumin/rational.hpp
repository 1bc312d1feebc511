#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace rumin {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

// Exact power with non-negative exponent.
inline Rational pow(const Rational& base, unsigned e)
{
  Rational result(1);
  for (unsigned i = 0; i < e; ++i) result *= base;
  return result;
}

}  // namespace rumin
