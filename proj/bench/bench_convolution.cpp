// Serial reference against the OpenMP kernels: wall time and bitwise agreement.

#include "rumin/convolution.hpp"
#include "rumin/probes.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

using namespace rumin;

namespace {

double seconds(const std::function<void()>& f)
{
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv)
{
  const int res = argc > 1 ? std::atoi(argv[1]) : 15;
  const GridSpec g{1, 1, res, res};
  const Grid f = Grid::sample(g, [](const double* p) { return gauge_bump(1, 1, p); });
  const HomogeneousKernel k(1, 2);
  std::printf("threads %d, grid %d^3\n", omp_get_max_threads(), res);

  Grid cs, cp;
  const double ts = seconds([&] { cs = group_convolve(f, k, Execution::serial); });
  const double tp = seconds([&] { cp = group_convolve(f, k, Execution::parallel); });
  std::printf("group_convolve      serial %8.3f s  parallel %8.3f s  speedup %5.2f  identical %s\n", ts, tp, ts / tp,
              cs.values() == cp.values() ? "yes" : "no");

  const GridSpec gd{1, 1, 4 * res + 1, 4 * res + 1};
  const Grid u = Grid::sample(gd, [](const double* p) { return gauge_bump(1, 1, p); });
  DerivativeResult ds, dp;
  const double us = seconds([&] { ds = discrete_derivative(u, 0, Execution::serial); });
  const double up = seconds([&] { dp = discrete_derivative(u, 0, Execution::parallel); });
  std::printf("discrete_derivative serial %8.3f s  parallel %8.3f s  speedup %5.2f  identical %s\n", us, up, us / up,
              ds.values.values() == dp.values.values() ? "yes" : "no");

  double ls = 0, lp = 0;
  const double ns = seconds([&] { ls = lp_norm(u, 3, {}, Execution::serial); });
  const double np = seconds([&] { lp = lp_norm(u, 3, {}, Execution::parallel); });
  std::printf("lp_norm             serial %8.3f s  parallel %8.3f s  speedup %5.2f  identical %s\n", ns, np, ns / np,
              ls == lp ? "yes" : "no");
  return cs.values() == cp.values() && ds.values.values() == dp.values.values() && ls == lp ? 0 : 1;
}
