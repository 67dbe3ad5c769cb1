#pragma once

#include <map>
#include <string>
#include <vector>

#include "f1/abelian.hpp"
#include "f1/fraction.hpp"
#include "f1/monoid.hpp"
#include "f1/poly.hpp"
#include "f1/tits.hpp"

namespace f1 {

/// A finite graded set: items carry a non-negative degree and a canonical
/// printable payload; canonical order is (degree, payload).
struct GradedSet {
  std::vector<std::pair<int, std::string>> items;

  void canonicalize();
  std::map<int, long long> census() const;
  long long total() const { return static_cast<long long>(items.size()); }
};

/// A point of the graded affine functor A^F: a partial map from slots of F
/// into D, stored as a sorted (slot, D code) support list. Degree = |support|.
struct AffinePoint {
  std::vector<std::pair<int, int>> support;

  int degree() const { return static_cast<int>(support.size()); }
  std::string key(const AbelianGroup& D) const;
};

/// G_m: everything sits in degree 1 and equals D there.
GradedSet gm_points(const AbelianGroup& D);

/// A^F over a finite index set of size f: degree-k piece is the disjoint
/// union of D^Y over k-subsets Y.
std::vector<AffinePoint> affine_points(int f, const AbelianGroup& D);
GradedSet affine_graded(int f, const AbelianGroup& D);

/// P^d: orbits of the diagonal D-action on the degree pieces of A^{d+1};
/// representatives normalize the coordinate at min(Y) to the identity.
std::vector<AffinePoint> proj_points(int d, const AbelianGroup& D);
GradedSet proj_graded(int d, const AbelianGroup& D);

/// Spec D0: homs in degree 0.
GradedSet spec_points(const AbelianGroup& D0, const AbelianGroup& D);

/// Coordinates of an affine point under a character: chi(g_j) on the support,
/// zero elsewhere.
std::vector<CycScalar> e_F(int f, const Character& chi, const AffinePoint& x);

/// A graded point of the Chevalley functor: (a, n, b) with a over Phi+,
/// n in the extended Weyl group, b over Phi_{p(n)}.
struct GPoint {
  AffinePoint a;  // slots = positive root indices
  ExtEl n;
  AffinePoint b;  // slots = positive root indices inside Phi_w

  int degree(int rank) const { return a.degree() + rank + b.degree(); }
};

/// Full enumeration of the graded Chevalley point set; throws BudgetExceeded
/// via chevalley_total if the materialized size would exceed the budget.
std::vector<GPoint> chevalley_points(const ExtWeylGroup& N, long long budget = 1000000);
GradedSet chevalley_graded(const ExtWeylGroup& N, long long budget = 1000000);

/// Total cardinality |G(D)| for |D| = n, by direct support-shape enumeration
/// (sum over Y subset Phi+, w, Z subset Phi_w of n^{|Y|+l+|Z|}).
long long chevalley_total(const WeylGroup& W, long long n);

/// Per-degree census by the same support-shape enumeration.
std::map<int, long long> chevalley_census(const WeylGroup& W, long long n);

/// A point of the monoid-functor extension: full coordinate maps into M and
/// an extended Weyl element over the unit group of M.
struct MPoint {
  std::vector<int> a;  // |Phi+| monoid codes
  ExtEl n;
  std::vector<int> b;  // |Phi_w| monoid codes, aligned with the inversion set
};

/// The set G(M, eps) = M^{Phi+} x coprod_w (p^{-1}(w) x M^{Phi_w}); N must be
/// the extension built over M's unit group.
std::vector<MPoint> chevalley_points_monoid(const ExtWeylGroup& N, const MonoidWithZero& M,
                                            long long budget = 1000000);

enum class GadgetKind { Gm, Affine, Proj, Chevalley };

/// Counting polynomial in the variable q (value |X(F_q)|).
Poly counting_polynomial_q(GadgetKind kind, const WeylGroup* W, int dim);
/// Same polynomial in the variable n = q - 1 (value |X(F_{1^n})|).
Poly counting_polynomial_n(GadgetKind kind, const WeylGroup* W, int dim);

/// Naturality of the evaluation against a morphism f: (D,eps) -> (D',eps'):
/// e_X(chi' o f) on X(D) equals e_X(chi') o X(f). Supported for Gm and Affine.
bool naturality_check(GadgetKind kind, int f_slots, const GroupHom& f, const Character& chi_prime);

}  // namespace f1
