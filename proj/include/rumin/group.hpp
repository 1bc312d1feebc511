#pragma once

// Heisenberg group H^n in exponential coordinates p = (x, y, t).

#include "rumin/rational.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rumin {

inline int homogeneous_dimension(int n) { return 2 * n + 2; }

template <class Scalar>
struct Point {
  std::vector<Scalar> x;
  std::vector<Scalar> y;
  Scalar t{};

  Point() = default;
  explicit Point(int n) : x(n, Scalar(0)), y(n, Scalar(0)), t(0) {}
  Point(std::vector<Scalar> x_, std::vector<Scalar> y_, Scalar t_)
      : x(std::move(x_)), y(std::move(y_)), t(std::move(t_))
  {
    if (x.size() != y.size()) throw std::invalid_argument("Point: x and y lengths differ");
  }

  int n() const { return static_cast<int>(x.size()); }

  // Coordinate k in the order x_1..x_n, y_1..y_n, t.
  const Scalar& coord(int k) const
  {
    const int m = n();
    if (k < m) return x[k];
    if (k < 2 * m) return y[k - m];
    return t;
  }
  Scalar& coord(int k)
  {
    const int m = n();
    if (k < m) return x[k];
    if (k < 2 * m) return y[k - m];
    return t;
  }

  bool operator==(const Point&) const = default;
};

using ExactPoint = Point<Rational>;
using RealPoint = Point<double>;

template <class Scalar>
Point<Scalar> identity_point(int n)
{
  return Point<Scalar>(n);
}

template <class Scalar>
Point<Scalar> multiply(const Point<Scalar>& p, const Point<Scalar>& q)
{
  if (p.n() != q.n()) throw std::invalid_argument("multiply: dimension mismatch");
  Point<Scalar> r(p.n());
  Scalar twist(0);
  for (int j = 0; j < p.n(); ++j) {
    r.x[j] = p.x[j] + q.x[j];
    r.y[j] = p.y[j] + q.y[j];
    twist += p.x[j] * q.y[j] - p.y[j] * q.x[j];
  }
  r.t = p.t + q.t + twist / Scalar(2);
  return r;
}

template <class Scalar>
Point<Scalar> inverse(const Point<Scalar>& p)
{
  Point<Scalar> r(p.n());
  for (int j = 0; j < p.n(); ++j) {
    r.x[j] = -p.x[j];
    r.y[j] = -p.y[j];
  }
  r.t = -p.t;
  return r;
}

// |p'|^4 + t^2; exact for rational points.
template <class Scalar>
Scalar gauge_fourth_power(const Point<Scalar>& p)
{
  Scalar r2(0);
  for (int j = 0; j < p.n(); ++j) r2 += p.x[j] * p.x[j] + p.y[j] * p.y[j];
  return r2 * r2 + p.t * p.t;
}

inline double as_double(double v) { return v; }
inline double as_double(const Rational& v) { return v.get_d(); }

// Korányi gauge (|p'|^4 + t^2)^{1/4}.
template <class Scalar>
double gauge(const Point<Scalar>& p)
{
  return std::sqrt(std::sqrt(as_double(gauge_fourth_power(p))));
}

template <class Scalar>
double distance(const Point<Scalar>& p, const Point<Scalar>& q)
{
  return gauge(multiply(inverse(p), q));
}

template <class Scalar>
Scalar distance_fourth_power(const Point<Scalar>& p, const Point<Scalar>& q)
{
  return gauge_fourth_power(multiply(inverse(p), q));
}

template <class Scalar>
class Dilation {
 public:
  explicit Dilation(Scalar lambda) : lambda_(std::move(lambda))
  {
    if (!(lambda_ > Scalar(0))) throw std::invalid_argument("Dilation: lambda must be positive");
  }
  const Scalar& lambda() const { return lambda_; }
  Dilation compose(const Dilation& other) const { return Dilation(lambda_ * other.lambda_); }

 private:
  Scalar lambda_;
};

// δ_λ(x, y, t) = (λx, λy, λ²t).
template <class Scalar>
Point<Scalar> dilate(const Dilation<Scalar>& d, const Point<Scalar>& p)
{
  Point<Scalar> r(p.n());
  const Scalar& l = d.lambda();
  for (int j = 0; j < p.n(); ++j) {
    r.x[j] = l * p.x[j];
    r.y[j] = l * p.y[j];
  }
  r.t = l * l * p.t;
  return r;
}

template <class Scalar>
Point<Scalar> dilate(const Scalar& lambda, const Point<Scalar>& p)
{
  return dilate(Dilation<Scalar>(lambda), p);
}

template <class Scalar>
struct Ball {
  Point<Scalar> center;
  double radius = 1.0;

  Ball(Point<Scalar> c, double r) : center(std::move(c)), radius(r)
  {
    if (!(r > 0)) throw std::invalid_argument("Ball: radius must be positive");
  }
  bool contains(const Point<Scalar>& q) const { return distance(center, q) < radius; }
};

// Euclidean norm of the coordinate vector (x, y, t).
template <class Scalar>
double euclidean_norm(const Point<Scalar>& p)
{
  double s = 0;
  for (int k = 0; k < 2 * p.n() + 1; ++k) {
    const double v = as_double(p.coord(k));
    s += v * v;
  }
  return std::sqrt(s);
}

struct GaugeEuclidPair {
  double gauge;
  double euclidean;
};

template <class Scalar>
GaugeEuclidPair gauge_vs_euclidean(const Point<Scalar>& p)
{
  return {gauge(p), euclidean_norm(p)};
}

// Empirical check of c0^{-2}|p| <= ρ(p) <= |p|^{1/2} on points sampled uniformly
// in the Euclidean ball of the given radius about e.
struct GaugeSandwichReport {
  int samples = 0;
  int upper_violations = 0;      // count of ρ(p) > |p|^{1/2}
  double max_euclid_over_gauge = 0;  // sup |p|/ρ(p) over the sample
  double c0_estimate = 1;        // smallest c0 >= 1 with c0^{-2}|p| <= ρ(p) on the sample
};

GaugeSandwichReport sample_gauge_sandwich(int n, int samples, double radius, std::mt19937_64& rng);

// Random point with coordinates uniform in [-scale, scale].
RealPoint random_point(int n, double scale, std::mt19937_64& rng);
ExactPoint random_exact_point(int n, int max_num, int max_den, std::mt19937_64& rng);

}  // namespace rumin
