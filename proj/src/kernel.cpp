#include "rumin/kernel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace rumin {

namespace {

double bump_exp(double x) { return x > 0 ? std::exp(-1 / x) : 0.0; }

}  // namespace

double cutoff_profile(double s)
{
  if (s <= 0.5) return 1;
  if (s >= 1) return 0;
  const double a = bump_exp(1 - s);
  const double b = bump_exp(s - 0.5);
  return a / (a + b);
}

double koranyi_ball_volume(int n)
{
  double fact = 1;
  for (int k = 2; k < n; ++k) fact *= k;
  return std::pow(std::numbers::pi, n) / fact * std::beta(n / 2.0, 1.5);
}

HomogeneousKernel::HomogeneousKernel(int n, double mu, double t_weight) : n_(n), mu_(mu), c_(t_weight)
{
  if (n < 1) throw std::invalid_argument("HomogeneousKernel: n must be positive");
  if (!(t_weight > 0)) throw std::invalid_argument("HomogeneousKernel: t weight must be positive");
}

double HomogeneousKernel::degree() const { return mu_ - homogeneous_dimension(n_) - (field_ >= 0 ? 1 : 0); }

double HomogeneousKernel::operator()(const double* p) const
{
  const int n = n_;
  double r2 = 0;
  for (int k = 0; k < 2 * n; ++k) r2 += p[k] * p[k];
  const double t = p[2 * n];
  const double s = r2 * r2 + c_ * t * t;  // |z|^4 + c t^2
  const double a = (mu_ - homogeneous_dimension(n)) / 4;
  double v;
  if (field_ < 0) {
    v = std::pow(s, a);
  } else {
    // X_j s = 4|z|² x_j − c y_j t,  Y_j s = 4|z|² y_j + c x_j t
    const int j = field_ % n;
    const bool is_x = field_ < n;
    const double ds = is_x ? 4 * r2 * p[j] - c_ * p[n + j] * t : 4 * r2 * p[n + j] + c_ * p[j] * t;
    v = a * std::pow(s, a - 1) * ds;
  }
  if (part_ == Part::whole) return v;
  const double rho = std::sqrt(std::sqrt(r2 * r2 + t * t));
  const double psi = cutoff_profile(rho / R_);
  if (part_ == Part::local) return psi == 0 ? 0.0 : psi * v;
  return psi == 1 ? 0.0 : (1 - psi) * v;
}

HomogeneousKernel HomogeneousKernel::with_part(Part part, double R) const
{
  if (!(R > 0)) throw std::invalid_argument("kernel cutoff radius must be positive");
  HomogeneousKernel k = *this;
  k.part_ = part;
  k.R_ = R;
  return k;
}

HomogeneousKernel HomogeneousKernel::derived(int field) const
{
  if (field < 0 || field >= 2 * n_) throw std::out_of_range("HomogeneousKernel::derived: horizontal field expected");
  if (part_ != Part::whole || field_ >= 0) throw std::logic_error("HomogeneousKernel::derived: whole kernels only");
  HomogeneousKernel k = *this;
  k.field_ = field;
  return k;
}

bool HomogeneousKernel::locally_integrable() const { return degree() > -homogeneous_dimension(n_); }

double HomogeneousKernel::singular_cell_integral(double volume) const
{
  const double Q = homogeneous_dimension(n_);
  if (field_ >= 0 || !(mu_ > 0) || mu_ >= Q || c_ != 1)
    throw std::logic_error("singular_cell_integral: only for undifferentiated gauge powers with 0 < μ < Q");
  const double r = std::pow(volume / koranyi_ball_volume(n_), 1 / Q);
  return Q / mu_ * volume * std::pow(r, mu_ - Q);
}

std::pair<HomogeneousKernel, HomogeneousKernel> kernel_split(const HomogeneousKernel& k, double R)
{
  return {k.with_part(HomogeneousKernel::Part::local, R), k.with_part(HomogeneousKernel::Part::tail, R)};
}

}  // namespace rumin
