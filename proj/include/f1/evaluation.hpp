#pragma once

#include <functional>

#include "f1/chevalley.hpp"
#include "f1/gadgets.hpp"

namespace f1 {

/// e_G on a graded point (a, n, b): psi over Phi+ with coordinates embed(a_r)
/// on the support and 0 off it, times e_N(n), times psi_w over Phi_{p(n)}.
template <class R>
Mat<R> e_G_graded(const R& ring, const ExtWeylGroup& N,
                  const std::function<typename R::Elem(int)>& embed, const GPoint& p) {
  const RootSystem& rs = N.roots();
  std::vector<typename R::Elem> a(rs.num_positive(), ring.zero());
  for (auto& [slot, g] : p.a.support) a[slot] = embed(g);
  std::vector<int> inv = N.weyl().inversion_set(p.n.w);
  std::vector<typename R::Elem> b(inv.size(), ring.zero());
  for (auto& [slot, g] : p.b.support) {
    for (size_t k = 0; k < inv.size(); ++k)
      if (inv[k] == slot) b[k] = embed(g);
  }
  Mat<R> m = psi(ring, rs, a);
  m = mat_mul(ring, m, e_N(ring, N, embed, p.n));
  return mat_mul(ring, m, psi_subset(ring, rs, inv, b));
}

/// Inverse of the field evaluation map: Bruhat-decompose g and extract the
/// monoid-functor coordinates. The lift table must be the one built from the
/// stored reduced words (the same normal form e_N uses).
inline MPoint invert_evaluation(const FiniteField& F, const ExtWeylGroup& N,
                                const MonoidWithZero& M, const LiftTable& lifts,
                                const Mat<FiniteField>& g) {
  const RootSystem& rs = N.roots();
  const WeylGroup& W = N.weyl();
  BruhatFactors f = bruhat_decompose(F, rs, W, lifts, g);
  MPoint p;
  std::vector<int> all_pos(rs.num_positive());
  for (int r = 0; r < rs.num_positive(); ++r) all_pos[r] = r;
  if (!psi_extract(F, rs, all_pos, f.u, p.a))
    throw std::logic_error("invert_evaluation: u part not in psi image");
  // torus point on the weight basis: t(omega_j) = d_1 ... d_j
  p.n.w = f.w;
  p.n.t.resize(rs.rank());
  int prefix = F.one();
  for (int j = 0; j < rs.rank(); ++j) {
    prefix = F.mul(prefix, f.h[j]);
    p.n.t[j] = M.unit_index(prefix);
  }
  p.b = f.uprime_coords;
  return p;
}

/// e_{G,A} on a monoid point over the multiplicative monoid of a field:
/// coordinates are ring elements directly.
inline Mat<FiniteField> e_G_monoid(const FiniteField& F, const ExtWeylGroup& N,
                                   const MonoidWithZero& M, const MPoint& p) {
  const RootSystem& rs = N.roots();
  std::vector<int> a(p.a.size());
  for (size_t i = 0; i < p.a.size(); ++i) a[i] = p.a[i];  // monoid code = field element
  std::function<int(int)> embed = [&](int uidx) { return M.unit_code(uidx); };
  std::vector<int> inv = N.weyl().inversion_set(p.n.w);
  Mat<FiniteField> m = psi(F, rs, a);
  m = mat_mul(F, m, e_N(F, N, embed, p.n));
  std::vector<int> b(p.b.begin(), p.b.end());
  return mat_mul(F, m, psi_subset(F, rs, inv, b));
}

}  // namespace f1
