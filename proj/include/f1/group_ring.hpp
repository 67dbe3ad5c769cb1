#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "f1/abelian.hpp"

namespace f1 {

/// The integral group ring Z[D], or the reduced ring Z[D,eps] = Z[D]/(1+eps)
/// when constructed with reduce = true (requires a pointed D).
///
/// Elements are sorted (group code, coefficient) support lists. In the
/// reduced ring every eps-orbit {g, eps+g} is folded onto its lexicographically
/// smaller member with a sign, so equality is structural comparison.
class GroupRing {
 public:
  using Elem = std::vector<std::pair<int, long long>>;

  GroupRing(const AbelianGroup& D, bool reduce);

  const AbelianGroup& group() const { return *D_; }
  bool reduced() const { return reduced_; }
  long long rank() const { return reduced_ ? D_->order() / 2 : D_->order(); }

  Elem zero() const { return {}; }
  Elem one() const { return from_group(D_->zero()); }
  Elem from_int(long long v) const;
  Elem from_group(int idx) const;  // image of a group element (folds eps)
  Elem make(std::vector<std::pair<int, long long>> raw) const;  // canonicalize

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;  // monomial units +/- g only

  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool is_zero(const Elem& a) const { return a.empty(); }

  std::string str(const Elem& a) const;

 private:
  const AbelianGroup* D_;
  bool reduced_;
  std::vector<int> rep_;   // canonical representative of each orbit
  std::vector<int> sign_;  // +1 if code is its own rep, else -1
};

/// Z[D,eps] when D is pointed, plain Z[D] otherwise.
inline GroupRing reduced_group_ring(const AbelianGroup& D) {
  return GroupRing(D, D.pointed());
}

/// A character chi of (D,eps) induces a ring homomorphism from Z[D,eps] into
/// the cyclotomic-style ring Z[Z/M, M/2] (M = exponent of D); this bundles the
/// target ring together with the induced map on group elements.
struct CharacterTarget {
  std::unique_ptr<AbelianGroup> cyc;
  std::unique_ptr<GroupRing> ring;
  long long M = 1;
  std::vector<int> image;  // D code -> Z/M code

  GroupRing::Elem map_group(int d_code) const { return ring->from_group(image[d_code]); }
  GroupRing::Elem map_elem(const GroupRing& src, const GroupRing::Elem& a) const;
};

CharacterTarget make_character_target(const AbelianGroup& D, const Character& chi);

/// Ring Z/m with integer-code elements; used as beta*(A) input and in tests.
class ModRing {
 public:
  using Elem = int;
  explicit ModRing(int m);

  int m() const { return m_; }
  Elem zero() const { return 0; }
  Elem one() const { return m_ == 1 ? 0 : 1; }
  Elem add(Elem a, Elem b) const { return (a + b) % m_; }
  Elem sub(Elem a, Elem b) const { return (a - b + m_) % m_; }
  Elem mul(Elem a, Elem b) const { return static_cast<int>((1LL * a * b) % m_); }
  Elem neg(Elem a) const { return (m_ - a) % m_; }
  Elem from_int(long long v) const;
  Elem inv(Elem a) const;
  bool eq(Elem a, Elem b) const { return a == b; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_unit(Elem a) const;
  std::string str(Elem a) const { return std::to_string(a); }

 private:
  int m_;
};

}  // namespace f1
