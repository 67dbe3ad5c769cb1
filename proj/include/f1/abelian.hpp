#pragma once

#include <string>
#include <vector>

#include "f1/fraction.hpp"

namespace f1 {

/// A finite abelian group Z/m_1 x ... x Z/m_k with a designated element eps
/// of order dividing 2. Elements are integer codes in [0, order): the code is
/// the big-endian mixed-radix rank of the tuple, so code order equals
/// lexicographic order on tuples.
class AbelianGroup {
 public:
  AbelianGroup(std::vector<int> orders, std::vector<int> eps);
  static AbelianGroup trivial() { return AbelianGroup({1}, {0}); }
  static AbelianGroup cyclic(int n, int eps = 0) { return AbelianGroup({n}, {eps}); }

  int rank() const { return static_cast<int>(orders_.size()); }
  const std::vector<int>& orders() const { return orders_; }
  long long order() const { return size_; }
  int size() const { return static_cast<int>(size_); }
  long long exponent() const;

  int index(const std::vector<int>& tuple) const;
  std::vector<int> tuple(int idx) const;

  int zero() const { return 0; }
  int add(int a, int b) const {
    if (!add_table_.empty()) return add_table_[a * size_ + b];
    return add_slow(a, b);
  }
  int neg(int a) const {
    if (!neg_table_.empty()) return neg_table_[a];
    return neg_slow(a);
  }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int scalar(long long k, int a) const;
  int order_of(int a) const;

  int eps() const { return eps_; }
  bool pointed() const { return eps_ != 0; }

  std::string str(int a) const;
  std::string name() const;  // e.g. "Z/2xZ/4:eps=(0,2)"

 private:
  int add_slow(int a, int b) const;
  int neg_slow(int a) const;

  std::vector<int> orders_;
  std::vector<int> eps_tuple_;
  int eps_ = 0;
  long long size_ = 1;
  std::vector<int> add_table_, neg_table_;  // built for small groups
};

/// Group homomorphism, stored as the images of the k canonical generators.
struct GroupHom {
  const AbelianGroup* src = nullptr;
  const AbelianGroup* dst = nullptr;
  std::vector<int> gen_images;  // dst codes, one per src factor

  int apply(int a) const;
  bool is_identity() const;
};

/// All homomorphisms src -> dst, duplicate free, in lexicographic order of
/// generator images. When both groups are pointed non-trivially only the
/// eps-preserving ones are returned.
std::vector<GroupHom> hom_set(const AbelianGroup& src, const AbelianGroup& dst);

GroupHom compose(const GroupHom& g, const GroupHom& f);  // g after f

/// A character of D, stored as one exact angle in Q/Z per cyclic factor.
struct Character {
  const AbelianGroup* grp = nullptr;
  std::vector<Frac> angles;

  Frac eval(int a) const;                // angle of chi(g)
  bool is_minus_one(int a) const { return eval(a) == angle_half(); }
};

/// The characters of (D, eps): all |D| of them when eps is trivial, exactly
/// the |D|/2 with chi(eps) = -1 otherwise. Deterministic order.
std::vector<Character> characters(const AbelianGroup& D);

/// chi' composed with f, as a character of f's source.
Character pullback(const Character& chi_prime, const GroupHom& f);

}  // namespace f1
