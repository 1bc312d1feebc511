#pragma once

// Kernels of type μ on H^n: k(p) = (|z|^4 + c t^2)^{(μ−Q)/4}, homogeneous of
// degree μ − Q for every c > 0 (c = 1 is the Korányi gauge power ρ^{μ−Q}).

#include "rumin/group.hpp"

#include <utility>

namespace rumin {

// Smooth profile: 1 on [0, ½], 0 on [1, ∞).
double cutoff_profile(double s);

// |B_ρ(e, 1)| = π^n/(n−1)! · B(n/2, 3/2).
double koranyi_ball_volume(int n);

class HomogeneousKernel {
 public:
  enum class Part { whole, local, tail };

  HomogeneousKernel(int n, double mu, double t_weight = 1);

  int n() const { return n_; }
  double mu() const { return mu_; }
  double t_weight() const { return c_; }
  // Degree of homogeneity μ − Q (minus one if differentiated).
  double degree() const;
  Part part() const { return part_; }
  double cutoff_radius() const { return R_; }
  // Horizontal field the kernel is differentiated along, or −1.
  int derivative_field() const { return field_; }

  // Coordinates x_1..x_n, y_1..y_n, t; +∞ or 0 at the origin as the formula gives.
  double operator()(const double* p) const;

  // ψ_R k or (1 − ψ_R) k with ψ_R(p) = cutoff_profile(ρ(p)/R).
  HomogeneousKernel with_part(Part part, double R) const;
  // W_field k for a horizontal field, computed from the closed form. Whole kernels only.
  HomogeneousKernel derived(int field) const;

  // ∫ over a gauge ball of volume V about e, used for the singular cell when
  // 0 < μ < Q: (Q/μ) V r^{μ−Q} with |B(e, r)| = V.
  double singular_cell_integral(double volume) const;
  bool locally_integrable() const;

 private:
  int n_;
  double mu_;
  double c_;
  Part part_ = Part::whole;
  double R_ = 0;
  int field_ = -1;
};

// k = ψ_R k + (1 − ψ_R) k.
std::pair<HomogeneousKernel, HomogeneousKernel> kernel_split(const HomogeneousKernel& k, double R);

}  // namespace rumin
