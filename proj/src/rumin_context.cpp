#include "rumin/rumin_context.hpp"

namespace rumin {

RuminContext::RuminContext(int n, int n_cap) : n_(n)
{
  if (n < 1 || n > n_cap) throw std::invalid_argument("RuminContext: n outside [1, cap]");
  const int top = 2 * n + 1;
  for (int h = 0; h <= top; ++h) {
    spaces_.push_back(build_spaces(n, h, n_cap));
    d0_.push_back(d0_matrix(n, h));
    d0inv_.push_back(pseudo_inverse(d0_.back()));
  }
  // Π_E0 = 1 − d_0^{-1} d_0 − d_0 d_0^{-1}
  for (int h = 0; h <= top; ++h) {
    RationalMatrix p = RationalMatrix::identity(lambda_dimension(n, h));
    p = p - d0inv_[h] * d0_[h];
    if (h > 0) p = p - d0_[h - 1] * d0inv_[h - 1];
    pi_e0_.push_back(std::move(p));
  }
}

std::vector<std::size_t> RuminContext::dimension_table() const
{
  std::vector<std::size_t> t;
  for (int h = 0; h <= top_degree(); ++h) t.push_back(dim_e0(h));
  return t;
}

}  // namespace rumin
