#pragma once

#include <string>
#include <vector>

#include "f1/poly.hpp"
#include "f1/root_system.hpp"

namespace f1 {

/// The Weyl group of a root system, fully enumerated by breadth-first closure
/// over right multiplication by simple reflections. Elements are identified by
/// their permutation of the indexed root set; each carries the BFS word, which
/// is reduced. Enumeration order is (length, word lexicographic).
class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs, int cap = 100000);

  const RootSystem& roots() const { return *rs_; }
  int size() const { return static_cast<int>(perm_.size()); }
  int identity() const { return 0; }

  int length(int w) const { return length_[w]; }
  const std::vector<int>& word(int w) const { return word_[w]; }
  const std::vector<int>& perm(int w) const { return perm_[w]; }

  int mul(int a, int b) const { return mult_[a * size_ + b]; }  // composition a*b
  int right_mul_gen(int w, int i) const { return right_[w * rank_ + i]; }
  int left_mul_gen(int i, int w) const { return left_[w * rank_ + i]; }
  int inverse(int w) const { return inverse_[w]; }
  int act_root(int w, int r_idx) const { return perm_[w][r_idx]; }

  /// Reflection s_r as a group element, for any root index.
  int reflection(int r_idx) const;

  /// Inversion set Phi_w = {r in Phi+ : w(r) < 0}, ascending root indices.
  std::vector<int> inversion_set(int w) const;

  int longest_element() const;
  Poly poincare_polynomial() const;

  /// Coxeter matrix m_ij = (number of roots in span{alpha_i, alpha_j}) / 2;
  /// validated against the order of s_i s_j.
  std::vector<std::vector<int>> coxeter_matrix() const;

  /// Action of w on L in the lattice basis (column b = image of basis b).
  const std::vector<std::vector<int>>& lattice_action(int w) const { return lat_[w]; }

  /// All reduced words of w (lexicographic order).
  std::vector<std::vector<int>> reduced_words(int w) const;

  std::string word_str(int w) const;  // "e" or digit string like "121"

 private:
  const RootSystem* rs_;
  int rank_;
  std::vector<std::vector<int>> perm_;
  std::vector<std::vector<int>> word_;
  std::vector<int> length_;
  std::vector<int> right_, left_, inverse_, mult_;
  int size_ = 0;
  std::vector<std::vector<std::vector<int>>> lat_;
  std::vector<int> refl_of_root_;
};

}  // namespace f1
