#pragma once

#include <string>
#include <vector>

#include "f1/abelian.hpp"
#include "f1/root_system.hpp"
#include "f1/weyl.hpp"

namespace f1 {

/// A point of the torus T = Hom(L, D): the tuple of its values (D codes) on
/// the chosen basis of L.
using TorusPoint = std::vector<int>;

/// An element (t, w) of the extended Weyl group, in torus-first normal form.
struct ExtEl {
  TorusPoint t;
  int w = 0;

  friend bool operator==(const ExtEl& a, const ExtEl& b) { return a.w == b.w && a.t == b.t; }
  friend bool operator<(const ExtEl& a, const ExtEl& b) {
    if (a.w != b.w) return a.w < b.w;
    return a.t < b.t;
  }
};

/// Tits' extension 1 -> Hom(L,D) -> N -> W -> 1 for a pair (D, eps) with
/// eps^2 = 1, realized directly in (t, w) normal form: products are computed
/// with the recursive 2-cocycle built from the elements h_r, so
/// (t1,w1)(t2,w2) = (t1 + w1(t2) + c(w1,w2), w1 w2).
class ExtWeylGroup {
 public:
  ExtWeylGroup(const WeylGroup& W, const AbelianGroup& D);

  const WeylGroup& weyl() const { return *W_; }
  const RootSystem& roots() const { return W_->roots(); }
  const AbelianGroup& coeff() const { return *D_; }
  long long size() const;  // |D|^l * |W|

  // torus arithmetic
  TorusPoint t_zero() const { return TorusPoint(rank_, D_->zero()); }
  TorusPoint t_add(const TorusPoint& a, const TorusPoint& b) const;
  TorusPoint t_neg(const TorusPoint& a) const;
  long long t_code(const TorusPoint& a) const;
  TorusPoint t_decode(long long code) const;
  long long torus_size() const;

  /// w acting on the torus: w(t) = t o w^{-1}.
  TorusPoint w_act(int w, const TorusPoint& t) const;

  /// h_s for the reflection at root r: x -> eps^{n_r(x)}.
  TorusPoint h_of_root(int r_idx) const;

  /// T_s = {x -> a^{nu0(x)}} with nu0 the primitive covector along n_r.
  std::vector<TorusPoint> T_s(int r_idx) const;

  /// 2-cocycle c(w1, w2) in T (precomputed at construction).
  const TorusPoint& cocycle(int w1, int w2) const {
    return cocycle_[w1 * W_->size() + w2];
  }

  ExtEl identity() const { return {t_zero(), W_->identity()}; }
  ExtEl mul(const ExtEl& a, const ExtEl& b) const;
  ExtEl inverse(const ExtEl& a) const;
  ExtEl power(const ExtEl& a, long long e) const;
  int order_of(const ExtEl& a) const;
  int project(const ExtEl& a) const { return a.w; }  // the map p

  /// Canonical lift of w: the product of the base lifts (0, s_i) along the
  /// stored reduced word; equals (0, w).
  ExtEl lift(int w) const { return {t_zero(), w}; }

  std::vector<ExtEl> fiber(int w) const;             // p^{-1}(w)
  std::vector<ExtEl> enumerate() const;              // all of N, (w, t) order

  /// N_s = T_s u T_s * a_s, where a_s is the canonical lift of the reflection
  /// (a base lift conjugated along w with w(alpha_i) = r). Satisfies
  /// N_s n T = T_s and a^2 = h_s on the nontrivial coset.
  std::vector<ExtEl> N_s(int r_idx) const;

  /// The full solution set {a in fiber(s) : a^2 = h_s}; contains the
  /// nontrivial coset of N_s, strictly when D has 2-torsion along directions
  /// fixed by s.
  std::vector<ExtEl> square_lifts(int r_idx) const;

  std::string str(const ExtEl& a) const;

 private:
  TorusPoint cocycle_compute(int w1, int w2) const;
  void check_member(const ExtEl& a) const;

  const WeylGroup* W_;
  const AbelianGroup* D_;
  int rank_;
  std::vector<TorusPoint> cocycle_;
};

/// Image of the restriction Hom(L~, D) -> Hom(L, D) along a lattice map
/// (sorted, duplicate free).
std::vector<TorusPoint> restricted_torus(const LatticeMap& phi, const AbelianGroup& D);

/// The homomorphism N_{D,eps} -> N_{D',eps'} induced by f: (D,eps) -> (D',eps').
ExtEl induced_map(const GroupHom& f, const ExtEl& a);

/// Checks that N_{D,eps} is generated by T together with the image of the
/// canonical copy computed for D0 = Z/2 (the amalgamation picture).
bool amalgamated_check(const ExtWeylGroup& N);

}  // namespace f1
