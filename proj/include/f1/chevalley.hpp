#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "f1/finite_field.hpp"
#include "f1/matrix.hpp"
#include "f1/poly.hpp"
#include "f1/root_system.hpp"
#include "f1/tits.hpp"
#include "f1/weyl.hpp"

namespace f1 {

/// Type-A matrix realization: SL_{l+1} over any supported exact ring.
/// x_r(t) = I + t E_{ij} for the root r = e_i - e_j; everything else is built
/// from these one-parameter subgroups.

template <class R>
Mat<R> x_r(const R& ring, const RootSystem& rs, int r_idx, const typename R::Elem& t) {
  auto [i, j] = rs.type_a_slot(r_idx);
  Mat<R> m = mat_identity(ring, rs.rank() + 1);
  m.at(i, j) = ring.add(m.at(i, j), t);
  return m;
}

/// n_r(t) = x_r(t) x_{-r}(-t^{-1}) x_r(t); t must be invertible.
template <class R>
Mat<R> n_r(const R& ring, const RootSystem& rs, int r_idx, const typename R::Elem& t) {
  auto ti = ring.inv(t);
  auto a = x_r(ring, rs, r_idx, t);
  auto b = x_r(ring, rs, rs.neg_index(r_idx), ring.neg(ti));
  return mat_mul(ring, mat_mul(ring, a, b), a);
}

/// h_r(t) = n_r(t) n_r(-1).
template <class R>
Mat<R> h_r(const R& ring, const RootSystem& rs, int r_idx, const typename R::Elem& t) {
  auto m1 = ring.neg(ring.one());
  return mat_mul(ring, n_r(ring, rs, r_idx, t), n_r(ring, rs, r_idx, m1));
}

/// psi(t) = prod_{r in Phi+} x_r(t_r), product in the stored root order.
/// `coords` is aligned with the positive-root indices.
template <class R>
Mat<R> psi(const R& ring, const RootSystem& rs, const std::vector<typename R::Elem>& coords) {
  Mat<R> m = mat_identity(ring, rs.rank() + 1);
  for (int r = 0; r < rs.num_positive(); ++r) {
    if (ring.is_zero(coords[r])) continue;
    m = mat_mul(ring, m, x_r(ring, rs, r, coords[r]));
  }
  return m;
}

/// psi_w: same product restricted to Phi_w (`roots` ascending, `coords` aligned).
template <class R>
Mat<R> psi_subset(const R& ring, const RootSystem& rs, const std::vector<int>& roots,
                  const std::vector<typename R::Elem>& coords) {
  Mat<R> m = mat_identity(ring, rs.rank() + 1);
  for (size_t k = 0; k < roots.size(); ++k) {
    if (ring.is_zero(coords[k])) continue;
    m = mat_mul(ring, m, x_r(ring, rs, roots[k], coords[k]));
  }
  return m;
}

/// Inverts psi on a unipotent matrix: greedy coordinate peeling in increasing
/// root order (heights are additive, so each entry is exposed in turn).
/// Returns false if a residue remains or a coordinate falls outside `roots`.
template <class R>
bool psi_extract(const R& ring, const RootSystem& rs, const std::vector<int>& roots, Mat<R> m,
                 std::vector<typename R::Elem>& coords) {
  coords.assign(roots.size(), ring.zero());
  std::map<int, int> pos;
  for (size_t k = 0; k < roots.size(); ++k) pos[roots[k]] = static_cast<int>(k);
  for (int r = 0; r < rs.num_positive(); ++r) {
    auto [i, j] = rs.type_a_slot(r);
    auto t = m.at(i, j);
    if (ring.is_zero(t)) continue;
    auto it = pos.find(r);
    if (it == pos.end()) return false;
    coords[it->second] = t;
    m = mat_mul(ring, x_r(ring, rs, r, ring.neg(t)), m);
  }
  return mat_is_identity(ring, m);
}

/// Evaluation of the extended Weyl group into SL_{l+1}(R):
/// e_N((t,w)) = diag(embed(t(e_1)),...,embed(t(e_{l+1}))) * prod n_{alpha_i}(1)
/// along the stored reduced word of w. `embed` sends a D code to R, must be
/// multiplicative with eps -> -1.
template <class R>
Mat<R> e_N(const R& ring, const ExtWeylGroup& N, const std::function<typename R::Elem(int)>& embed,
           const ExtEl& el) {
  const RootSystem& rs = N.roots();
  const AbelianGroup& D = N.coeff();
  int l = rs.rank();
  const auto& es = rs.diag_chars();
  Mat<R> m(ring, l + 1);
  for (int i = 0; i <= l; ++i) {
    int val = D.zero();
    for (int a = 0; a < l; ++a) val = D.add(val, D.scalar(es[i][a], el.t[a]));
    m.at(i, i) = embed(val);
  }
  for (int i : N.weyl().word(el.w)) m = mat_mul(ring, m, n_r(ring, rs, rs.simple_index(i), ring.one()));
  return m;
}

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All of SL_{l+1}(F_q) by determinant-filtered enumeration, in lexicographic
/// entry order. The brute-force oracle behind the counting identities.
std::vector<Mat<FiniteField>> enumerate_group(int l, const FiniteField& F,
                                              long long budget = 100000000);

/// Bruhat factors of g: g = u * h * n_w * u', with u' supported on Phi_w.
struct BruhatFactors {
  Mat<FiniteField> u;
  std::vector<int> h;  // diagonal entries
  int w = 0;
  std::vector<int> inversion_roots;      // Phi_w, ascending
  std::vector<int> uprime_coords;        // aligned with inversion_roots
  Mat<FiniteField> uprime;
};

/// Cached monomial lifts n_w = prod n_{alpha_i}(1) for every Weyl element.
class LiftTable {
 public:
  LiftTable(const FiniteField& F, const RootSystem& rs, const WeylGroup& W);
  const Mat<FiniteField>& lift(int w) const { return lifts_[w]; }
  const Mat<FiniteField>& lift_inv(int w) const { return lift_invs_[w]; }
  /// Weyl element whose lift has the given nonzero pattern; -1 if none.
  int from_pattern(const Mat<FiniteField>& monomial) const;

 private:
  const FiniteField* F_;
  std::vector<Mat<FiniteField>> lifts_, lift_invs_;
  std::map<std::vector<int>, int> pattern_;
};

BruhatFactors bruhat_decompose(const FiniteField& F, const RootSystem& rs, const WeylGroup& W,
                               const LiftTable& lifts, const Mat<FiniteField>& g);

/// Big-cell factorization g = u * n * v with p(n) = w0; empty when g lies in
/// a smaller cell.
std::optional<BruhatFactors> big_cell_factor(const FiniteField& F, const RootSystem& rs,
                                             const WeylGroup& W, const LiftTable& lifts,
                                             const Mat<FiniteField>& g);

/// Chevalley commutator constants for independent roots r, s of type A:
/// x_s(u)^{-1} x_r(t) x_s(u) x_r(t)^{-1} = prod x_{ir+js}(t^i u^j)^{C_ij},
/// computed symbolically over Z[t,u]. Only (i,j) = (1,1) can occur here.
std::vector<std::tuple<int, int, int>> commutator_constants(const RootSystem& rs, int r_idx,
                                                            int s_idx);

}  // namespace f1
