#include "rumin/group.hpp"

#include <algorithm>

namespace rumin {

RealPoint random_point(int n, double scale, std::mt19937_64& rng)
{
  std::uniform_real_distribution<double> u(-scale, scale);
  RealPoint p(n);
  for (int k = 0; k < 2 * n + 1; ++k) p.coord(k) = u(rng);
  return p;
}

ExactPoint random_exact_point(int n, int max_num, int max_den, std::mt19937_64& rng)
{
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  ExactPoint p(n);
  for (int k = 0; k < 2 * n + 1; ++k) p.coord(k) = make_rational(num(rng), den(rng));
  return p;
}

GaugeSandwichReport sample_gauge_sandwich(int n, int samples, double radius, std::mt19937_64& rng)
{
  GaugeSandwichReport rep;
  rep.samples = samples;
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int dim = 2 * n + 1;
  for (int s = 0; s < samples; ++s) {
    // uniform in the Euclidean ball
    RealPoint p(n);
    double norm = 0;
    for (int k = 0; k < dim; ++k) {
      p.coord(k) = g(rng);
      norm += p.coord(k) * p.coord(k);
    }
    norm = std::sqrt(norm);
    const double r = radius * std::pow(u(rng), 1.0 / dim);
    for (int k = 0; k < dim; ++k) p.coord(k) *= r / norm;

    const auto [rho, e] = gauge_vs_euclidean(p);
    if (rho > std::sqrt(e) * (1 + 1e-12)) ++rep.upper_violations;
    if (rho > 0) rep.max_euclid_over_gauge = std::max(rep.max_euclid_over_gauge, e / rho);
  }
  rep.c0_estimate = std::max(1.0, std::sqrt(rep.max_euclid_over_gauge));
  return rep;
}

}  // namespace rumin
