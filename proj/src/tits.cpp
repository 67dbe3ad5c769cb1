#include "f1/tits.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

namespace f1 {

ExtWeylGroup::ExtWeylGroup(const WeylGroup& W, const AbelianGroup& D)
    : W_(&W), D_(&D), rank_(W.roots().rank()) {
  cocycle_.resize(static_cast<size_t>(W.size()) * W.size());
  for (int w1 = 0; w1 < W.size(); ++w1)
    for (int w2 = 0; w2 < W.size(); ++w2)
      cocycle_[static_cast<size_t>(w1) * W.size() + w2] = cocycle_compute(w1, w2);
}

long long ExtWeylGroup::size() const { return torus_size() * W_->size(); }

long long ExtWeylGroup::torus_size() const {
  long long s = 1;
  for (int i = 0; i < rank_; ++i) s *= D_->order();
  return s;
}

TorusPoint ExtWeylGroup::t_add(const TorusPoint& a, const TorusPoint& b) const {
  TorusPoint r(rank_);
  for (int i = 0; i < rank_; ++i) r[i] = D_->add(a[i], b[i]);
  return r;
}

TorusPoint ExtWeylGroup::t_neg(const TorusPoint& a) const {
  TorusPoint r(rank_);
  for (int i = 0; i < rank_; ++i) r[i] = D_->neg(a[i]);
  return r;
}

long long ExtWeylGroup::t_code(const TorusPoint& a) const {
  long long c = 0;
  for (int i = 0; i < rank_; ++i) c = c * D_->order() + a[i];
  return c;
}

TorusPoint ExtWeylGroup::t_decode(long long code) const {
  TorusPoint t(rank_);
  for (int i = rank_ - 1; i >= 0; --i) {
    t[i] = static_cast<int>(code % D_->order());
    code /= D_->order();
  }
  return t;
}

TorusPoint ExtWeylGroup::w_act(int w, const TorusPoint& t) const {
  // (w(t))(v_j) = t(w^{-1} v_j)
  const auto& m = W_->lattice_action(W_->inverse(w));
  TorusPoint out(rank_, D_->zero());
  for (int j = 0; j < rank_; ++j)
    for (int a = 0; a < rank_; ++a)
      out[j] = D_->add(out[j], D_->scalar(m[a][j], t[a]));
  return out;
}

TorusPoint ExtWeylGroup::h_of_root(int r_idx) const {
  const Root& r = roots().root(r_idx);
  TorusPoint h(rank_);
  for (int j = 0; j < rank_; ++j) h[j] = D_->scalar(r.cov_lat[j], D_->eps());
  return h;
}

std::vector<TorusPoint> ExtWeylGroup::T_s(int r_idx) const {
  const Root& r = roots().root(r_idx);
  long long g = 0;
  for (int j = 0; j < rank_; ++j) g = std::gcd(g, static_cast<long long>(std::abs(r.cov_lat[j])));
  std::vector<long long> nu0(rank_);
  for (int j = 0; j < rank_; ++j) nu0[j] = r.cov_lat[j] / g;
  std::set<TorusPoint> out;
  for (int a = 0; a < D_->size(); ++a) {
    TorusPoint t(rank_);
    for (int j = 0; j < rank_; ++j) t[j] = D_->scalar(nu0[j], a);
    out.insert(t);
  }
  return {out.begin(), out.end()};
}

TorusPoint ExtWeylGroup::cocycle_compute(int w1, int w2) const {
  if (w2 == W_->identity()) return t_zero();
  int i = W_->word(w2).front();  // w2 = s_i v, l(v) = l(w2) - 1
  int v = W_->left_mul_gen(i, w2);
  int w1si = W_->right_mul_gen(w1, i);
  if (W_->length(w1si) > W_->length(w1)) return cocycle_compute(w1si, v);
  TorusPoint h = h_of_root(roots().simple_index(i));
  return t_add(w_act(w1si, h), cocycle_compute(w1si, v));
}

void ExtWeylGroup::check_member(const ExtEl& a) const {
  if (static_cast<int>(a.t.size()) != rank_ || a.w < 0 || a.w >= W_->size())
    throw std::invalid_argument("ExtWeylGroup: element from a different extension");
  for (int v : a.t)
    if (v < 0 || v >= D_->size())
      throw std::invalid_argument("ExtWeylGroup: element from a different extension");
}

ExtEl ExtWeylGroup::mul(const ExtEl& a, const ExtEl& b) const {
  check_member(a);
  check_member(b);
  TorusPoint t = t_add(a.t, t_add(w_act(a.w, b.t), cocycle(a.w, b.w)));
  return {std::move(t), W_->mul(a.w, b.w)};
}

ExtEl ExtWeylGroup::inverse(const ExtEl& a) const {
  int wi = W_->inverse(a.w);
  // solve (a.t + a.w(x) + c(a.w, wi)) = 0
  TorusPoint rhs = t_neg(t_add(a.t, cocycle(a.w, wi)));
  return {w_act(wi, rhs), wi};
}

ExtEl ExtWeylGroup::power(const ExtEl& a, long long e) const {
  if (e < 0) return power(inverse(a), -e);
  ExtEl r = identity();
  for (long long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

int ExtWeylGroup::order_of(const ExtEl& a) const {
  ExtEl x = a;
  int n = 1;
  while (!(x == identity())) {
    x = mul(x, a);
    ++n;
    if (n > 4 * size()) throw std::logic_error("ExtWeylGroup: runaway order");
  }
  return n;
}

std::vector<ExtEl> ExtWeylGroup::fiber(int w) const {
  std::vector<ExtEl> out;
  out.reserve(torus_size());
  for (long long c = 0; c < torus_size(); ++c) out.push_back({t_decode(c), w});
  return out;
}

std::vector<ExtEl> ExtWeylGroup::enumerate() const {
  std::vector<ExtEl> out;
  out.reserve(size());
  for (int w = 0; w < W_->size(); ++w)
    for (long long c = 0; c < torus_size(); ++c) out.push_back({t_decode(c), w});
  return out;
}

std::vector<ExtEl> ExtWeylGroup::N_s(int r_idx) const {
  // canonical lift of s_r: conjugate a base lift (0, s_i) by a lift of the
  // first w (in enumeration order) with w(alpha_i) = +/- r
  ExtEl a_s = identity();
  bool found = false;
  for (int w = 0; w < W_->size() && !found; ++w)
    for (int i = 0; i < rank_; ++i) {
      int img = W_->act_root(w, roots().simple_index(i));
      if (img == r_idx || img == roots().neg_index(r_idx)) {
        ExtEl base{t_zero(), W_->reflection(roots().simple_index(i))};
        a_s = mul(mul(lift(w), base), inverse(lift(w)));
        found = true;
        break;
      }
    }
  if (!found) throw std::logic_error("ExtWeylGroup: reflection not conjugate to a simple one");
  std::vector<ExtEl> out;
  for (const TorusPoint& t : T_s(r_idx)) {
    out.push_back({t, W_->identity()});
    out.push_back(mul({t, W_->identity()}, a_s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExtEl> ExtWeylGroup::square_lifts(int r_idx) const {
  int s = W_->reflection(r_idx);
  TorusPoint h = h_of_root(r_idx);
  std::vector<ExtEl> out;
  for (const ExtEl& a : fiber(s)) {
    ExtEl sq = mul(a, a);
    if (sq.w == W_->identity() && sq.t == h) out.push_back(a);
  }
  return out;
}

std::string ExtWeylGroup::str(const ExtEl& a) const {
  std::string s = "(";
  for (int i = 0; i < rank_; ++i) {
    if (i) s += ",";
    s += D_->str(a.t[i]);
  }
  s += "; " + W_->word_str(a.w) + ")";
  return s;
}

std::vector<TorusPoint> restricted_torus(const LatticeMap& phi, const AbelianGroup& D) {
  int l_src = phi.m.empty() ? 0 : static_cast<int>(phi.m[0].size());
  int l_dst = static_cast<int>(phi.m.size());
  long long total = 1;
  for (int i = 0; i < l_dst; ++i) total *= D.order();
  std::set<TorusPoint> out;
  for (long long code = 0; code < total; ++code) {
    // t~ in Hom(L~, D)
    std::vector<int> tt(l_dst);
    long long c = code;
    for (int i = l_dst - 1; i >= 0; --i) {
      tt[i] = static_cast<int>(c % D.order());
      c /= D.order();
    }
    // (t~ o phi)(v_j) = sum_a phi[a][j] * t~_a
    TorusPoint t(l_src, D.zero());
    for (int j = 0; j < l_src; ++j)
      for (int a = 0; a < l_dst; ++a) t[j] = D.add(t[j], D.scalar(phi.m[a][j], tt[a]));
    out.insert(t);
  }
  return {out.begin(), out.end()};
}

ExtEl induced_map(const GroupHom& f, const ExtEl& a) {
  ExtEl out;
  out.w = a.w;
  out.t.resize(a.t.size());
  for (size_t i = 0; i < a.t.size(); ++i) out.t[i] = f.apply(a.t[i]);
  return out;
}

bool amalgamated_check(const ExtWeylGroup& N) {
  const AbelianGroup& D = N.coeff();
  if (!D.pointed()) return true;  // nothing to amalgamate over
  AbelianGroup z2 = AbelianGroup::cyclic(2, 1);
  GroupHom f{&z2, &D, {D.eps()}};
  ExtWeylGroup N0(N.weyl(), z2);

  // generators: the torus and the images of the canonical Z/2 copy
  std::set<ExtEl> gens;
  for (long long c = 0; c < N.torus_size(); ++c) gens.insert({N.t_decode(c), N.weyl().identity()});
  for (const ExtEl& a : N0.enumerate()) gens.insert(induced_map(f, a));

  std::set<ExtEl> closure = gens;
  std::vector<ExtEl> frontier(gens.begin(), gens.end());
  while (!frontier.empty()) {
    std::vector<ExtEl> next;
    for (const ExtEl& x : frontier)
      for (const ExtEl& g : gens) {
        ExtEl y = N.mul(x, g);
        if (closure.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return static_cast<long long>(closure.size()) == N.size();
}

}  // namespace f1
