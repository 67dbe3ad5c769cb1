#pragma once

#include <memory>
#include <string>
#include <vector>

#include "f1/abelian.hpp"
#include "f1/finite_field.hpp"
#include "f1/group_ring.hpp"

namespace f1 {

/// A finite commutative monoid with 0 and 1 and a designated element of
/// square one. Three finite backends: a pointed abelian group with an
/// adjoined zero, the multiplicative monoid of F_q, and the multiplicative
/// monoid of Z/m. Elements are integer codes with 0 = the zero element.
///
/// The unit group is exposed as an AbelianGroup together with the code<->index
/// translation, so the torus machinery can run over it unchanged.
class MonoidWithZero {
 public:
  enum class Kind { AdjoinedZero, FieldUnits, ModUnits };

  static MonoidWithZero adjoin_zero(const AbelianGroup& D);
  static MonoidWithZero of_field(const FiniteField& F);
  static MonoidWithZero of_mod_ring(const ModRing& R);

  Kind kind() const { return kind_; }
  int size() const { return size_; }
  int zero() const { return 0; }
  int one() const { return one_; }
  int eps() const { return eps_; }
  int mul(int a, int b) const;
  bool is_unit(int a) const { return unit_index_[a] >= 0; }

  const AbelianGroup& unit_group() const;
  int unit_index(int code) const;  // code -> index in unit_group
  int unit_code(int uidx) const;   // inverse translation

  /// Field element behind a code (FieldUnits backend only; identity map).
  const FiniteField* field() const { return field_; }

  std::string str(int a) const;

 private:
  Kind kind_ = Kind::AdjoinedZero;
  const AbelianGroup* D_ = nullptr;     // AdjoinedZero
  const FiniteField* field_ = nullptr;  // FieldUnits
  int mod_ = 0;                         // ModUnits
  int size_ = 0, one_ = 0, eps_ = 0;
  std::unique_ptr<AbelianGroup> owned_units_;
  std::vector<int> unit_index_;  // code -> unit group index, -1 for non-units
  std::vector<int> unit_code_;   // unit group index -> code
};

inline MonoidWithZero adjoin_zero(const AbelianGroup& D) {
  return MonoidWithZero::adjoin_zero(D);
}
inline MonoidWithZero monoid_of_ring(const FiniteField& F) {
  return MonoidWithZero::of_field(F);
}
inline MonoidWithZero monoid_of_ring(const ModRing& R) {
  return MonoidWithZero::of_mod_ring(R);
}

/// The multiplicative monoid of Z[D,eps]: infinite, so only lazily evaluated
/// operations are available — no enumeration.
struct GroupRingMonoid {
  const GroupRing* R;
  using Elem = GroupRing::Elem;
  Elem mul(const Elem& a, const Elem& b) const { return R->mul(a, b); }
  Elem one() const { return R->one(); }
  Elem zero() const { return R->zero(); }
  Elem minus_one() const { return R->neg(R->one()); }
};

inline GroupRingMonoid monoid_of_ring(const GroupRing& R) { return GroupRingMonoid{&R}; }

}  // namespace f1
