#include "rumin/forms.hpp"

namespace rumin {

PolyForm wedge(const PolyForm& a, const PolyForm& b)
{
  if (a.n() != b.n() || a.frame() != b.frame()) throw std::invalid_argument("wedge: incompatible forms");
  const int n = a.n();
  PolyForm r(n, a.degree() + b.degree(), a.frame());
  if (a.degree() + b.degree() > 2 * n + 1) return r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      const int s = wedge_sign(a.mask(i), b.mask(j));
      if (s == 0) continue;
      Polynomial c = a[i] * b[j];
      if (s < 0) c = -c;
      r.add(a.mask(i) | b.mask(j), c);
    }
  }
  return r;
}

namespace {

// images[k] is the 1-form that basis element k of the source frame becomes.
PolyForm change_frame(const PolyForm& f, const std::vector<PolyForm>& images, Frame target)
{
  const int n = f.n();
  PolyForm out(n, f.degree(), target);
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (f[j].is_zero()) continue;
    PolyForm prod(n, 0, target);
    prod[0] = f[j];
    const Mask S = f.mask(j);
    for (int k = 0; k <= 2 * n; ++k)
      if (S & (Mask(1) << k)) prod = wedge(prod, images[k]);
    out += prod;
  }
  return out;
}

std::vector<PolyForm> frame_images(int n, Frame target)
{
  const int nv = 2 * n + 1;
  std::vector<PolyForm> images;
  for (int k = 0; k < 2 * n; ++k) {
    PolyForm e(n, 1, target);
    e[k] = Polynomial::constant(nv, 1);
    images.push_back(e);
  }
  // target euclidean: θ = dt + ½ Σ (y_j dx_j − x_j dy_j)
  // target invariant: dt = θ + ½ Σ (x_j dy_j − y_j dx_j)
  const Rational half = target == Frame::euclidean ? make_rational(1, 2) : make_rational(-1, 2);
  PolyForm last(n, 1, target);
  last[2 * n] = Polynomial::constant(nv, 1);
  for (int j = 0; j < n; ++j) {
    last[j] = Polynomial::variable(nv, n + j) * half;
    last[n + j] = Polynomial::variable(nv, j) * (-half);
  }
  images.push_back(last);
  return images;
}

}  // namespace

PolyForm to_euclidean(const PolyForm& f)
{
  if (f.frame() == Frame::euclidean) return f;
  return change_frame(f, frame_images(f.n(), Frame::euclidean), Frame::euclidean);
}

PolyForm to_invariant(const PolyForm& f)
{
  if (f.frame() == Frame::invariant) return f;
  return change_frame(f, frame_images(f.n(), Frame::invariant), Frame::invariant);
}

PolyForm multiply(const Polynomial& g, const PolyForm& f)
{
  PolyForm r(f.n(), f.degree(), f.frame());
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!f[i].is_zero()) r[i] = g * f[i];
  return r;
}

PolyForm compose(const PolyForm& f, const std::vector<Polynomial>& images)
{
  PolyForm r(f.n(), f.degree(), f.frame());
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!f[i].is_zero()) r[i] = f[i].compose(images);
  return r;
}

PolyForm random_poly_form(int n, int h, int max_degree, int terms, int coef_range,
                          std::mt19937_64& rng, Frame frame)
{
  PolyForm r(n, h, frame);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = random_polynomial(2 * n + 1, max_degree, terms, coef_range, rng);
  return r;
}

}  // namespace rumin

namespace rumin {

PolyForm exterior_d_euclidean(const PolyForm& f)
{
  const int n = f.n();
  PolyForm r(n, f.degree() + 1, Frame::euclidean);
  if (f.degree() > 2 * n) return r;
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (f[j].is_zero()) continue;
    const Mask S = f.mask(j);
    for (int k = 0; k <= 2 * n; ++k) {
      const int s = wedge_sign(Mask(1) << k, S);
      if (s == 0) continue;
      Polynomial pc = f[j].partial(k);
      if (pc.is_zero()) continue;
      r.add((Mask(1) << k) | S, s < 0 ? -pc : pc);
    }
  }
  return r;
}

}  // namespace rumin
