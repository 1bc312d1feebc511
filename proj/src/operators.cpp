#include "rumin/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace rumin {

namespace {

enum CacheKind { kind_dc = 0, kind_delta = 1, kind_laplacian = 2 };

Polynomial apply_word(const Word& w, const Polynomial& f)
{
  Polynomial g = f;
  for (auto it = w.rbegin(); it != w.rend() && !g.is_zero(); ++it) g = derive(*it, g);
  return g;
}

OperatorMatrix compute_dc(const RuminContext& ctx, int h)
{
  const int n = ctx.n();
  const std::size_t cols = ctx.dim_e0(h);
  const std::size_t rows = ctx.dim_e0(h + 1);
  OperatorMatrix D(n, rows, cols, h, h + 1);
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<EnvElement> u(cols, EnvElement(n));
    u[j] = EnvElement::unit(n);
    const GenericForm xi = ctx.from_e0(h, u);
    const GenericForm r = ctx.project_E0(exterior_d(ctx.project_E(xi)));
    const auto col = ctx.to_e0(r);
    if (!(ctx.from_e0(h + 1, col) == r))
      throw std::logic_error("build_dc: image does not lie in E0");
    for (std::size_t i = 0; i < rows; ++i) D(i, j) = col[i];
  }
  return D;
}

}  // namespace

int e0_weight(int n, int h) { return h <= n ? h : h + 1; }

int dc_order(int n, int h) { return h == n ? 2 : 1; }

int laplacian_order(int n, int h) { return (h == n || h == n + 1) ? 4 : 2; }

const OperatorMatrix& build_dc(const RuminContext& ctx, int h)
{
  if (h < 0 || h > 2 * ctx.n()) throw std::out_of_range("build_dc: degree out of range");
  return ctx.cached(kind_dc, h, [&] { return compute_dc(ctx, h); });
}

OperatorMatrix build_delta_c(const RuminContext& ctx, int h, bool inject_sign_fault)
{
  if (h < 1 || h > ctx.top_degree()) throw std::out_of_range("build_delta_c: degree out of range");
  const OperatorMatrix& delta = ctx.cached(kind_delta, h, [&] {
    return weighted_adjoint(build_dc(ctx, h - 1), ctx.e0(h - 1).gram, ctx.e0(h).gram);
  });
  if (!inject_sign_fault) return delta;
  OperatorMatrix faulty = delta;
  for (std::size_t i = 0; i < faulty.rows(); ++i)
    for (std::size_t j = 0; j < faulty.cols(); ++j)
      if (!faulty(i, j).is_zero()) {
        faulty(i, j) = -faulty(i, j);
        return faulty;
      }
  return faulty;
}

OperatorMatrix laplacian_from(int n, int h, const std::vector<OperatorMatrix>& dc,
                              const std::vector<OperatorMatrix>& delta,
                              const std::vector<std::size_t>& dims)
{
  const int top = 2 * n + 1;
  OperatorMatrix L(n, dims[h], dims[h], h, h);
  // d_c δ_c exists for h >= 1, δ_c d_c for h <= 2n
  const bool has_down_up = h >= 1;
  const bool has_up_down = h <= top - 1;
  if (has_down_up) {
    const OperatorMatrix a = dc[h - 1] * delta[h];
    L = L + (h == n ? a * a : a);
  }
  if (has_up_down) {
    const OperatorMatrix b = delta[h + 1] * dc[h];
    L = L + (h == n + 1 ? b * b : b);
  }
  return L;
}

ComplexOperators build_complex(const RuminContext& ctx, bool inject_delta_fault)
{
  const int n = ctx.n();
  ComplexOperators ops;
  for (int h = 0; h <= 2 * n; ++h) ops.dc.push_back(build_dc(ctx, h));
  ops.delta.emplace_back();
  for (int h = 1; h <= 2 * n + 1; ++h) ops.delta.push_back(build_delta_c(ctx, h, inject_delta_fault));
  const auto dims = ctx.dimension_table();
  for (int h = 0; h <= 2 * n + 1; ++h) ops.laplacian.push_back(laplacian_from(n, h, ops.dc, ops.delta, dims));
  return ops;
}

const OperatorMatrix& build_laplacian(const RuminContext& ctx, int h)
{
  if (h < 0 || h > ctx.top_degree()) throw std::out_of_range("build_laplacian: degree out of range");
  return ctx.cached(kind_laplacian, h, [&] {
    const int n = ctx.n();
    std::vector<OperatorMatrix> dc(2 * n + 1), delta(2 * n + 2);
    for (int k = std::max(0, h - 1); k <= std::min(2 * n, h); ++k) dc[k] = build_dc(ctx, k);
    for (int k = std::max(1, h); k <= std::min(2 * n + 1, h + 1); ++k) delta[k] = build_delta_c(ctx, k);
    return laplacian_from(n, h, dc, delta, ctx.dimension_table());
  });
}

PolyVector dc_via_forms(const RuminContext& ctx, int h, const PolyVector& u)
{
  const PolyForm f = ctx.from_e0(h, u);
  return ctx.to_e0(ctx.project_E0(exterior_d(ctx.project_E(f))));
}

PolyVector CommutatorExpansion::apply(const PolyVector& u) const
{
  if (u.size() != cols) throw std::invalid_argument("CommutatorExpansion::apply: length mismatch");
  PolyVector out(rows, Polynomial(2 * n + 1));
  for (const auto& t : terms) {
    const Polynomial dz = apply_word(t.zeta_word, zeta);
    if (dz.is_zero()) continue;
    const Polynomial du = apply_word(t.arg_word, u[t.col]);
    out[t.row] += dz * du * t.coef;
  }
  return out;
}

int CommutatorExpansion::argument_order() const
{
  int k = -1;
  for (const auto& t : terms) k = std::max(k, static_cast<int>(t.arg_word.size()));
  return k;
}

int CommutatorExpansion::max_zeta_order() const
{
  int k = -1;
  for (const auto& t : terms) k = std::max(k, static_cast<int>(t.zeta_word.size()));
  return k;
}

bool CommutatorExpansion::horizontal_only() const
{
  for (const auto& t : terms) {
    for (int l : t.zeta_word)
      if (l >= 2 * n) return false;
    for (int l : t.arg_word)
      if (l >= 2 * n) return false;
  }
  return true;
}

CommutatorExpansion CommutatorExpansion::restricted_to_order(int k) const
{
  CommutatorExpansion r = *this;
  r.terms.clear();
  for (const auto& t : terms)
    if (static_cast<int>(t.arg_word.size()) == k) r.terms.push_back(t);
  return r;
}

CommutatorExpansion commutator_with_function(const RuminContext& ctx, int h, const Polynomial& zeta)
{
  const OperatorMatrix& D = build_dc(ctx, h);
  CommutatorExpansion ex;
  ex.n = ctx.n();
  ex.h = h;
  ex.rows = D.rows();
  ex.cols = D.cols();
  ex.zeta = zeta;
  for (std::size_t i = 0; i < D.rows(); ++i)
    for (std::size_t j = 0; j < D.cols(); ++j) {
      if (D(i, j).is_zero()) continue;
      // W_w(ζ u) = Σ_A (W_{w|A} ζ)(W_{w|A^c} u); the commutator keeps A ≠ ∅
      for (const auto& [w, c] : to_horizontal_words(D(i, j))) {
        const std::size_t m = w.size();
        for (unsigned A = 1; A < (1u << m); ++A) {
          CommutatorTerm t;
          t.row = i;
          t.col = j;
          t.coef = c;
          for (std::size_t k = 0; k < m; ++k) ((A >> k) & 1u ? t.zeta_word : t.arg_word).push_back(w[k]);
          ex.terms.push_back(std::move(t));
        }
      }
    }
  return ex;
}

PolyVector commutator_direct(const RuminContext& ctx, int h, const Polynomial& zeta, const PolyVector& u)
{
  PolyVector zu;
  for (const auto& p : u) zu.push_back(zeta * p);
  PolyVector a = dc_via_forms(ctx, h, zu);
  const PolyVector b = dc_via_forms(ctx, h, u);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= zeta * b[i];
  return a;
}

int argument_order_by_commutators(const VectorOperator& op, int n, const std::vector<PolyVector>& inputs,
                                  int max_order)
{
  const int nv = 2 * n + 1;
  // ad_g(C)(u) = C(g u) − g C(u)
  auto ad = [nv](const VectorOperator& c, int coord) -> VectorOperator {
    return [c, coord, nv](const PolyVector& u) {
      const Polynomial g = Polynomial::variable(nv, coord);
      PolyVector gu;
      for (const auto& p : u) gu.push_back(g * p);
      PolyVector a = c(gu);
      const PolyVector b = c(u);
      for (std::size_t i = 0; i < a.size(); ++i) a[i] -= g * b[i];
      return a;
    };
  };
  std::vector<VectorOperator> level{op};
  std::vector<int> last_coord{0};
  for (int k = 0; k <= max_order; ++k) {
    // level holds all k-fold nested commutators; order <= k iff every (k+1)-fold one vanishes
    std::vector<VectorOperator> next;
    std::vector<int> next_last;
    bool all_zero = true;
    for (std::size_t idx = 0; idx < level.size(); ++idx)
      for (int c = last_coord[idx]; c < nv; ++c) {
        VectorOperator nested = ad(level[idx], c);
        for (const auto& u : inputs)
          if (!is_zero(nested(u))) all_zero = false;
        next.push_back(nested);
        next_last.push_back(c);
      }
    if (all_zero) return k;
    level = std::move(next);
    last_coord = std::move(next_last);
  }
  return max_order + 1;
}

std::vector<Polynomial> translation_dilation_map(const ExactPoint& p, const Rational& r)
{
  const int n = p.n();
  const int nv = 2 * n + 1;
  std::vector<Polynomial> images(nv);
  Polynomial t = Polynomial::constant(nv, p.t) + Polynomial::variable(nv, 2 * n) * (r * r);
  for (int j = 0; j < n; ++j) {
    const Polynomial x = Polynomial::variable(nv, j);
    const Polynomial y = Polynomial::variable(nv, n + j);
    images[j] = Polynomial::constant(nv, p.x[j]) + x * r;
    images[n + j] = Polynomial::constant(nv, p.y[j]) + y * r;
    t += (y * (p.x[j] * r) - x * (p.y[j] * r)) * make_rational(1, 2);
  }
  images[2 * n] = t;
  return images;
}

PolyForm pullback_translation_dilation(const ExactPoint& p, const Rational& r, const PolyForm& omega)
{
  if (!(r > 0)) throw std::invalid_argument("pullback: r must be positive");
  if (omega.frame() != Frame::invariant) throw std::invalid_argument("pullback: invariant frame expected");
  const auto images = translation_dilation_map(p, r);
  PolyForm out(omega.n(), omega.degree());
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (omega[i].is_zero()) continue;
    const int w = mask_weight(omega.mask(i), omega.n());
    out[i] = omega[i].compose(images) * pow(r, static_cast<unsigned>(w));
  }
  return out;
}

PolyVector pullback_e0(const RuminContext& ctx, int h, const ExactPoint& p, const Rational& r,
                       const PolyVector& u)
{
  return ctx.to_e0(pullback_translation_dilation(p, r, ctx.from_e0(h, u)));
}

PolyVector random_e0_vector(const RuminContext& ctx, int h, int max_degree, int terms, int coef_range,
                            std::mt19937_64& rng)
{
  PolyVector u;
  for (std::size_t j = 0; j < ctx.dim_e0(h); ++j)
    u.push_back(random_polynomial(2 * ctx.n() + 1, max_degree, terms, coef_range, rng));
  return u;
}

bool is_zero(const PolyVector& v)
{
  return std::all_of(v.begin(), v.end(), [](const Polynomial& p) { return p.is_zero(); });
}

PolyVector operator-(const PolyVector& a, const PolyVector& b)
{
  if (a.size() != b.size()) throw std::invalid_argument("PolyVector: length mismatch");
  PolyVector r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

}  // namespace rumin
