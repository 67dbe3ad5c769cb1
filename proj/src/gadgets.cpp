#include "f1/gadgets.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "f1/chevalley.hpp"

namespace f1 {

void GradedSet::canonicalize() { std::sort(items.begin(), items.end()); }

std::map<int, long long> GradedSet::census() const {
  std::map<int, long long> c;
  for (auto& [deg, key] : items) c[deg] += 1;
  return c;
}

std::string AffinePoint::key(const AbelianGroup& D) const {
  std::string s = "{";
  for (size_t i = 0; i < support.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(support[i].first) + ":" + D.str(support[i].second);
  }
  return s + "}";
}

GradedSet gm_points(const AbelianGroup& D) {
  GradedSet g;
  for (int a = 0; a < D.size(); ++a) g.items.emplace_back(1, D.str(a));
  g.canonicalize();
  return g;
}

namespace {

// all k-subsets of {0..f-1} for all k, by (size, lex); then D^Y lexicographic
void for_each_affine(int f, const AbelianGroup& D,
                     const std::function<void(const AffinePoint&)>& visit) {
  for (int k = 0; k <= f; ++k) {
    std::vector<int> y(k);
    for (int i = 0; i < k; ++i) y[i] = i;
    while (true) {
      std::vector<int> vals(k, 0);
      while (true) {
        AffinePoint p;
        for (int i = 0; i < k; ++i) p.support.emplace_back(y[i], vals[i]);
        visit(p);
        int i = k - 1;
        while (i >= 0 && ++vals[i] == D.size()) vals[i--] = 0;
        if (i < 0) break;
      }
      // next k-subset
      int i = k - 1;
      while (i >= 0 && y[i] == f - k + i) --i;
      if (i < 0) break;
      ++y[i];
      for (int j = i + 1; j < k; ++j) y[j] = y[j - 1] + 1;
    }
  }
}

}  // namespace

std::vector<AffinePoint> affine_points(int f, const AbelianGroup& D) {
  std::vector<AffinePoint> out;
  for_each_affine(f, D, [&](const AffinePoint& p) { out.push_back(p); });
  return out;
}

GradedSet affine_graded(int f, const AbelianGroup& D) {
  GradedSet g;
  for (const AffinePoint& p : affine_points(f, D)) g.items.emplace_back(p.degree(), p.key(D));
  g.canonicalize();
  return g;
}

std::vector<AffinePoint> proj_points(int d, const AbelianGroup& D) {
  // degree-k piece: (k+1)-subsets Y with the coordinate at min(Y) pinned to 0
  std::vector<AffinePoint> out;
  for (const AffinePoint& p : affine_points(d + 1, D)) {
    if (p.support.empty()) continue;
    if (p.support.front().second != D.zero()) continue;
    out.push_back(p);
  }
  return out;
}

GradedSet proj_graded(int d, const AbelianGroup& D) {
  GradedSet g;
  for (const AffinePoint& p : proj_points(d, D))
    g.items.emplace_back(p.degree() - 1, p.key(D));
  g.canonicalize();
  return g;
}

GradedSet spec_points(const AbelianGroup& D0, const AbelianGroup& D) {
  GradedSet g;
  for (const GroupHom& h : hom_set(D0, D)) {
    std::string key = "[";
    for (size_t i = 0; i < h.gen_images.size(); ++i) {
      if (i) key += ",";
      key += D.str(h.gen_images[i]);
    }
    g.items.emplace_back(0, key + "]");
  }
  g.canonicalize();
  return g;
}

std::vector<CycScalar> e_F(int f, const Character& chi, const AffinePoint& x) {
  std::vector<CycScalar> out(f, CycScalar::make_zero());
  for (auto& [slot, g] : x.support) out[slot] = CycScalar::root(chi.eval(g));
  return out;
}

long long chevalley_total(const WeylGroup& W, long long n) {
  long long total = 0;
  for (auto& [deg, cnt] : chevalley_census(W, n)) total += cnt;
  return total;
}

std::map<int, long long> chevalley_census(const WeylGroup& W, long long n) {
  const RootSystem& rs = W.roots();
  int N = rs.num_positive();
  int l = rs.rank();
  const __int128 limit = static_cast<__int128>(1) << 62;
  std::vector<__int128> npow(2 * N + l + 1, 1);
  for (size_t i = 1; i < npow.size(); ++i) {
    npow[i] = npow[i - 1] * n;
    if (npow[i] >= limit) throw std::overflow_error("chevalley_census: count exceeds 64-bit range");
  }
  // subsets counted by size via binomials, but enumerated as actual shapes
  std::map<int, __int128> census;
  std::vector<long long> subsets_by_size(N + 1, 0);
  for (long long mask = 0; mask < (1LL << N); ++mask)
    subsets_by_size[__builtin_popcountll(mask)] += 1;
  for (int w = 0; w < W.size(); ++w) {
    int lw = W.length(w);
    std::vector<long long> w_subsets(lw + 1, 0);
    for (long long mask = 0; mask < (1LL << lw); ++mask)
      w_subsets[__builtin_popcountll(mask)] += 1;
    for (int ka = 0; ka <= N; ++ka)
      for (int kb = 0; kb <= lw; ++kb) {
        int deg = ka + l + kb;
        census[deg] += subsets_by_size[ka] * npow[ka] * npow[l] * w_subsets[kb] * npow[kb];
        if (census[deg] >= limit)
          throw std::overflow_error("chevalley_census: count exceeds 64-bit range");
      }
  }
  std::map<int, long long> out;
  for (auto& [deg, cnt] : census) out[deg] = static_cast<long long>(cnt);
  return out;
}

std::vector<GPoint> chevalley_points(const ExtWeylGroup& N, long long budget) {
  const WeylGroup& W = N.weyl();
  long long size = chevalley_total(W, N.coeff().order());
  if (size > budget)
    throw BudgetExceeded("chevalley_points: " + std::to_string(size) + " points over budget");
  const AbelianGroup& D = N.coeff();
  int npos = N.roots().num_positive();
  std::vector<GPoint> out;
  out.reserve(size);
  std::vector<AffinePoint> a_parts = affine_points(npos, D);
  for (int w = 0; w < W.size(); ++w) {
    std::vector<int> inv = W.inversion_set(w);
    // b-parts: affine points over slots Phi_w, realized by slot translation
    std::vector<AffinePoint> b_parts;
    for (const AffinePoint& p : affine_points(static_cast<int>(inv.size()), D)) {
      AffinePoint q;
      for (auto& [slot, g] : p.support) q.support.emplace_back(inv[slot], g);
      b_parts.push_back(std::move(q));
    }
    for (const ExtEl& n : N.fiber(w))
      for (const AffinePoint& a : a_parts)
        for (const AffinePoint& b : b_parts) out.push_back(GPoint{a, n, b});
  }
  return out;
}

GradedSet chevalley_graded(const ExtWeylGroup& N, long long budget) {
  GradedSet g;
  const AbelianGroup& D = N.coeff();
  int l = N.roots().rank();
  for (const GPoint& p : chevalley_points(N, budget))
    g.items.emplace_back(p.degree(l),
                         p.a.key(D) + "|" + N.str(p.n) + "|" + p.b.key(D));
  g.canonicalize();
  return g;
}

std::vector<MPoint> chevalley_points_monoid(const ExtWeylGroup& N, const MonoidWithZero& M,
                                            long long budget) {
  const WeylGroup& W = N.weyl();
  int npos = N.roots().num_positive();
  // |M|^N * sum_w |M*|^l |M|^{l(w)}
  long long size = 0;
  for (int w = 0; w < W.size(); ++w) {
    long long c = 1;
    for (int i = 0; i < npos; ++i) c *= M.size();
    c *= N.torus_size();
    for (int i = 0; i < W.length(w); ++i) c *= M.size();
    size += c;
  }
  if (size > budget)
    throw BudgetExceeded("chevalley_points_monoid: " + std::to_string(size) + " over budget");

  std::vector<MPoint> out;
  out.reserve(size);
  std::vector<std::vector<int>> a_parts;
  {
    std::vector<int> a(npos, 0);
    while (true) {
      a_parts.push_back(a);
      int i = npos - 1;
      while (i >= 0 && ++a[i] == M.size()) a[i--] = 0;
      if (i < 0) break;
    }
  }
  for (int w = 0; w < W.size(); ++w) {
    int lw = W.length(w);
    std::vector<std::vector<int>> b_parts;
    std::vector<int> b(lw, 0);
    while (true) {
      b_parts.push_back(b);
      int i = lw - 1;
      while (i >= 0 && ++b[i] == M.size()) b[i--] = 0;
      if (i < 0) break;
    }
    for (const ExtEl& n : N.fiber(w))
      for (const auto& a : a_parts)
        for (const auto& bb : b_parts) out.push_back(MPoint{a, n, bb});
  }
  return out;
}

Poly counting_polynomial_q(GadgetKind kind, const WeylGroup* W, int dim) {
  switch (kind) {
    case GadgetKind::Gm:
      return Poly({-1, 1});  // q - 1
    case GadgetKind::Affine:
      return Poly::x().pow(dim);  // q^|F|
    case GadgetKind::Proj: {
      std::vector<long long> c(dim + 1, 1);
      return Poly(std::move(c));  // 1 + q + ... + q^d
    }
    case GadgetKind::Chevalley: {
      if (!W) throw std::invalid_argument("counting_polynomial: Weyl group required");
      const RootSystem& rs = W->roots();
      Poly qm1({-1, 1});
      Poly p = qm1.pow(rs.rank()) * Poly::x().pow(rs.num_positive()) * W->poincare_polynomial();
      return p;
    }
  }
  throw std::logic_error("counting_polynomial: unreachable");
}

Poly counting_polynomial_n(GadgetKind kind, const WeylGroup* W, int dim) {
  return counting_polynomial_q(kind, W, dim).compose(Poly({1, 1}));  // q = n + 1
}

bool naturality_check(GadgetKind kind, int f_slots, const GroupHom& f, const Character& chi_prime) {
  const AbelianGroup& D = *f.src;
  Character pulled = pullback(chi_prime, f);
  if (kind == GadgetKind::Gm) {
    for (int g = 0; g < D.size(); ++g)
      if (!(pulled.eval(g) == chi_prime.eval(f.apply(g)))) return false;
    return true;
  }
  if (kind == GadgetKind::Affine) {
    for (const AffinePoint& x : affine_points(f_slots, D)) {
      AffinePoint fx;
      for (auto& [slot, g] : x.support) fx.support.emplace_back(slot, f.apply(g));
      auto lhs = e_F(f_slots, pulled, x);
      auto rhs = e_F(f_slots, chi_prime, fx);
      if (!(lhs == rhs)) return false;
    }
    return true;
  }
  throw std::invalid_argument("naturality_check: gadget kind unsupported");
}

}  // namespace f1
