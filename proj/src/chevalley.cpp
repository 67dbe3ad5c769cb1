#include "f1/chevalley.hpp"

#include <algorithm>
#include <tuple>

namespace f1 {

std::vector<Mat<FiniteField>> enumerate_group(int l, const FiniteField& F, long long budget) {
  int n = l + 1;
  long long total = 1;
  for (int i = 0; i < n * n; ++i) {
    total *= F.q();
    if (total > budget) throw BudgetExceeded("enumerate_group: q^(l+1)^2 over budget");
  }
  std::vector<Mat<FiniteField>> out;
  std::vector<int> code(n * n, 0);
  while (true) {
    Mat<FiniteField> m(F, n);
    for (int i = 0; i < n * n; ++i) m.a[i] = code[i];
    if (F.eq(mat_det(F, m), F.one())) out.push_back(m);
    int i = n * n - 1;
    while (i >= 0 && ++code[i] == F.q()) code[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

LiftTable::LiftTable(const FiniteField& F, const RootSystem& rs, const WeylGroup& W) : F_(&F) {
  int n = rs.rank() + 1;
  auto one = F.one();
  auto mone = F.from_int(-1);
  lifts_.reserve(W.size());
  lift_invs_.reserve(W.size());
  for (int w = 0; w < W.size(); ++w) {
    Mat<FiniteField> m = mat_identity(F, n);
    for (int i : W.word(w)) m = mat_mul(F, m, n_r(F, rs, rs.simple_index(i), one));
    Mat<FiniteField> mi = mat_identity(F, n);
    const auto& word = W.word(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      mi = mat_mul(F, mi, n_r(F, rs, rs.simple_index(*it), mone));
    if (!mat_is_identity(F, mat_mul(F, m, mi)))
      throw std::logic_error("LiftTable: inverse lift mismatch");
    std::vector<int> pat(n, -1);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        if (!F.is_zero(m.at(i, j))) {
          if (pat[j] >= 0) throw std::logic_error("LiftTable: lift not monomial");
          pat[j] = i;
        }
    pattern_[pat] = w;
    lifts_.push_back(std::move(m));
    lift_invs_.push_back(std::move(mi));
  }
}

int LiftTable::from_pattern(const Mat<FiniteField>& monomial) const {
  int n = monomial.n;
  std::vector<int> pat(n, -1);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (!F_->is_zero(monomial.at(i, j))) {
        if (pat[j] >= 0) return -1;
        pat[j] = i;
      }
  auto it = pattern_.find(pat);
  return it == pattern_.end() ? -1 : it->second;
}

namespace {

// inverse of a product of root unipotents, by reversing the factor list
Mat<FiniteField> unipotent_inverse(const FiniteField& F, const RootSystem& rs,
                                   const std::vector<int>& roots, const std::vector<int>& coords) {
  Mat<FiniteField> m = mat_identity(F, rs.rank() + 1);
  for (size_t k = roots.size(); k-- > 0;)
    m = mat_mul(F, m, x_r(F, rs, roots[k], F.neg(coords[k])));
  return m;
}

}  // namespace

BruhatFactors bruhat_decompose(const FiniteField& F, const RootSystem& rs, const WeylGroup& W,
                               const LiftTable& lifts, const Mat<FiniteField>& g) {
  int n = g.n;
  if (F.is_zero(mat_det(F, g)) || !F.eq(mat_det(F, g), F.one()))
    throw std::invalid_argument("bruhat_decompose: determinant must be 1");

  // two-sided elimination g = u * m * v with u, v upper unitriangular and m monomial
  Mat<FiniteField> m = g;
  Mat<FiniteField> u = mat_identity(F, n);
  Mat<FiniteField> v = mat_identity(F, n);
  std::vector<int> pivot_col_of_row(n, -1);
  for (int j = 0; j < n; ++j) {
    // kill entries in already-pivoted rows using their single-entry columns
    for (int k = 0; k < n; ++k) {
      int jp = pivot_col_of_row[k];
      if (jp < 0 || F.is_zero(m.at(k, j))) continue;
      int c = F.neg(F.mul(m.at(k, j), F.inv(m.at(k, jp))));
      for (int i = 0; i < n; ++i) m.at(i, j) = F.add(m.at(i, j), F.mul(c, m.at(i, jp)));
      // v <- (I - c E_{jp,j}) v
      for (int col = 0; col < n; ++col)
        v.at(jp, col) = F.add(v.at(jp, col), F.mul(F.neg(c), v.at(j, col)));
    }
    // pivot: lowest unpivoted row with a nonzero entry
    int piv = -1;
    for (int i = n - 1; i >= 0; --i)
      if (pivot_col_of_row[i] < 0 && !F.is_zero(m.at(i, j))) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::logic_error("bruhat_decompose: singular during elimination");
    // clear the column above the pivot (rows k < piv, necessarily unpivoted or zero)
    for (int k = 0; k < piv; ++k) {
      if (F.is_zero(m.at(k, j))) continue;
      int c = F.neg(F.mul(m.at(k, j), F.inv(m.at(piv, j))));
      for (int col = 0; col < n; ++col) m.at(k, col) = F.add(m.at(k, col), F.mul(c, m.at(piv, col)));
      // u <- u (I - c E_{k,piv})
      for (int row = 0; row < n; ++row)
        u.at(row, piv) = F.add(u.at(row, piv), F.mul(F.neg(c), u.at(row, k)));
    }
    pivot_col_of_row[piv] = j;
  }

  int w = lifts.from_pattern(m);
  if (w < 0) throw std::logic_error("bruhat_decompose: monomial pattern not a Weyl element");
  Mat<FiniteField> h_mat = mat_mul(F, m, lifts.lift_inv(w));
  std::vector<int> h(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (i != j && !F.is_zero(h_mat.at(i, j)))
        throw std::logic_error("bruhat_decompose: non-diagonal torus part");
    h[i] = h_mat.at(i, i);
  }

  // factor v = v1 * v2 with v2 in U_w; unique, found by enumeration over U_w
  std::vector<int> inv_roots = W.inversion_set(w);
  std::vector<int> all_pos(rs.num_positive());
  for (int r = 0; r < rs.num_positive(); ++r) all_pos[r] = r;
  std::vector<bool> in_phi_w(rs.num_positive(), false);
  for (int r : inv_roots) in_phi_w[r] = true;

  long long count = 1;
  for (size_t k = 0; k < inv_roots.size(); ++k) count *= F.q();
  std::vector<int> b(inv_roots.size(), 0);
  std::optional<std::vector<int>> found;
  Mat<FiniteField> v1 = mat_identity(F, n);
  for (long long step = 0; step < count; ++step) {
    Mat<FiniteField> v2inv = unipotent_inverse(F, rs, inv_roots, b);
    Mat<FiniteField> cand = mat_mul(F, v, v2inv);
    std::vector<int> coords;
    if (psi_extract(F, rs, all_pos, cand, coords)) {
      bool complement_only = true;
      for (int r = 0; r < rs.num_positive(); ++r)
        if (in_phi_w[r] && !F.is_zero(coords[r])) complement_only = false;
      if (complement_only) {
        found = b;
        v1 = cand;
        break;
      }
    }
    int i = static_cast<int>(b.size()) - 1;
    while (i >= 0 && ++b[i] == F.q()) b[i--] = 0;
    if (i < 0) break;
  }
  if (!found) throw std::logic_error("bruhat_decompose: U = U_w^c U_w factorization failed");

  // g = u h n_w v1 v2 = (u h (n_w v1 n_w^{-1}) h^{-1}) * h * n_w * v2
  Mat<FiniteField> x = mat_mul(F, mat_mul(F, lifts.lift(w), v1), lifts.lift_inv(w));
  Mat<FiniteField> hx = mat_mul(F, h_mat, x);
  Mat<FiniteField> hx_hinv(F, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) hx_hinv.at(i, j) = F.mul(hx.at(i, j), F.inv(h[j]));
  Mat<FiniteField> u_final = mat_mul(F, u, hx_hinv);

  BruhatFactors out;
  out.u = u_final;
  out.h = h;
  out.w = w;
  out.inversion_roots = inv_roots;
  out.uprime_coords = *found;
  out.uprime = psi_subset(F, rs, inv_roots, *found);

  // postcondition: the factors reconstruct g and u is unitriangular
  std::vector<int> ucoords;
  if (!psi_extract(F, rs, all_pos, out.u, ucoords))
    throw std::logic_error("bruhat_decompose: u part not unipotent");
  Mat<FiniteField> rebuilt = mat_mul(F, mat_mul(F, mat_mul(F, out.u, h_mat), lifts.lift(w)), out.uprime);
  if (!mat_eq(F, rebuilt, g)) throw std::logic_error("bruhat_decompose: reconstruction failed");
  return out;
}

std::optional<BruhatFactors> big_cell_factor(const FiniteField& F, const RootSystem& rs,
                                             const WeylGroup& W, const LiftTable& lifts,
                                             const Mat<FiniteField>& g) {
  BruhatFactors f = bruhat_decompose(F, rs, W, lifts, g);
  if (f.w != W.longest_element()) return std::nullopt;
  return f;
}

std::vector<std::tuple<int, int, int>> commutator_constants(const RootSystem& rs, int r_idx,
                                                            int s_idx) {
  const auto& rc = rs.root(r_idx).coord;
  const auto& sc = rs.root(s_idx).coord;
  // reject linearly dependent roots
  bool dependent = true;
  for (size_t a = 0; a < rc.size() && dependent; ++a)
    for (size_t b = a + 1; b < rc.size() && dependent; ++b)
      if (rc[a] * sc[b] - rc[b] * sc[a] != 0) dependent = false;
  if (dependent) throw std::invalid_argument("commutator_constants: dependent roots");

  PolyRing2 R(8);
  auto t = Poly2::var_t(8);
  auto u = Poly2::var_u(8);
  auto lhs = mat_mul(R, mat_mul(R, x_r(R, rs, s_idx, R.neg(u)), x_r(R, rs, r_idx, t)),
                     mat_mul(R, x_r(R, rs, s_idx, u), x_r(R, rs, r_idx, R.neg(t))));

  // candidate roots ir+js, i,j >= 1, in increasing i+j order
  std::vector<std::tuple<int, int, int>> out;
  Mat<PolyRing2> expect = mat_identity(R, rs.rank() + 1);
  for (int total = 2; total <= 6; ++total)
    for (int i = 1; i < total; ++i) {
      int j = total - i;
      std::vector<int> comb(rc.size());
      for (size_t a = 0; a < rc.size(); ++a) comb[a] = i * rc[a] + j * sc[a];
      int idx = rs.find_root(comb);
      if (idx < 0) continue;
      // read C from the t^i u^j coefficient at the slot of ir+js
      auto [row, col] = rs.type_a_slot(idx);
      long long c = lhs.at(row, col).get(i, j);
      if (c < -2 || c > 2) throw std::logic_error("commutator_constants: constant out of range");
      Poly2 mono(8);
      mono.at(i, j) = c;
      expect = mat_mul(R, expect, x_r(R, rs, idx, mono));
      out.emplace_back(i, j, static_cast<int>(c));
    }
  if (!mat_eq(R, lhs, expect))
    throw std::logic_error("commutator_constants: identity fails symbolically");
  return out;
}

}  // namespace f1
