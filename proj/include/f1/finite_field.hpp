#pragma once

#include <string>
#include <vector>

namespace f1 {

/// The finite field F_q, q = p^k <= 81, with a fixed modulus polynomial per q.
///
/// Elements are integer codes in [0, q): the code's base-p digits are the
/// coefficients (low degree first) of the residue polynomial. Code 0 is the
/// additive and code 1 the multiplicative identity. All operations are table
/// driven; the tables are validated at construction (a nonzero product of
/// nonzero elements certifies the modulus irreducible).
class FiniteField {
 public:
  using Elem = int;

  FiniteField(int p, int k);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem inv(Elem a) const;
  Elem pow(Elem a, long long e) const;
  Elem frobenius(Elem a) const { return pow(a, p_); }
  Elem from_int(long long v) const;

  bool eq(Elem a, Elem b) const { return a == b; }
  bool is_zero(Elem a) const { return a == 0; }

  std::vector<int> coeffs(Elem a) const;  // length k, base-p digits
  std::string str(Elem a) const { return std::to_string(a); }

 private:
  int p_, k_, q_;
  std::vector<int> modulus_;  // monic, degree k, coeffs low->high, length k+1
  std::vector<Elem> add_, mul_, neg_, inv_;
};

}  // namespace f1
