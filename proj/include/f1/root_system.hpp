#pragma once

#include <map>
#include <string>
#include <vector>

namespace f1 {

enum class LatticeTag { SimplyConnected, Adjoint };

/// One root: its coordinates in the simple-root basis and its coroot n_r as a
/// covector, expressed both on the simple roots and on the chosen basis of L.
struct Root {
  std::vector<int> coord;     // simple-root coordinates
  std::vector<int> cov_root;  // n_r(alpha_j)
  std::vector<int> cov_lat;   // n_r(v_j) on the lattice basis
  int height = 0;             // sum of coordinates
};

/// A root system {L, Phi, n_r} built from a finite-type Cartan matrix.
///
/// Roots are always stored in simple-root coordinates; the lattice tag only
/// changes the coroot covectors on L and hence Hom(L, D). Root indices:
/// [0, N) are the positive roots sorted by (height, lex), and index i + N is
/// the negative of root i. Construction generates Phi as the closure of the
/// simple roots under reflections and checks the root-system axioms.
class RootSystem {
 public:
  static RootSystem make(const std::string& type, LatticeTag tag = LatticeTag::SimplyConnected,
                         int root_cap = 240);
  static RootSystem from_cartan(const std::vector<std::vector<int>>& cartan, LatticeTag tag,
                                int root_cap = 240);

  int rank() const { return rank_; }
  LatticeTag tag() const { return tag_; }
  const std::string& type_name() const { return type_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  int num_positive() const { return num_positive_; }
  int num_roots() const { return 2 * num_positive_; }
  const Root& root(int idx) const { return roots_[idx]; }
  bool is_positive(int idx) const { return idx < num_positive_; }
  int neg_index(int idx) const { return (idx + num_positive_) % (2 * num_positive_); }
  int simple_index(int i) const { return simple_pos_[i]; }  // index of alpha_i
  int find_root(const std::vector<int>& coord) const;       // -1 if absent

  /// s_r(x) for x a root, by index.
  int reflect_root(int r_idx, int x_idx) const;

  /// n_r evaluated on a lattice vector (L-basis coordinates).
  long long pair_lat(int r_idx, const std::vector<int>& v) const;

  /// L-basis coordinates of alpha_j (column j of the embedding matrix).
  const std::vector<std::vector<int>>& root_in_lattice() const { return root_in_lattice_; }

  /// s_i acting on L in the lattice basis (column b = image of basis vector b).
  std::vector<std::vector<int>> simple_reflection_on_lattice(int i) const;

  bool is_type_a() const { return type_a_; }
  /// Diagonal-character vectors e_1..e_{l+1} in L-basis coordinates
  /// (type A with simply connected lattice only).
  const std::vector<std::vector<int>>& diag_chars() const;
  /// Matrix slot (i, j) of a type-A root r = e_i - e_j (0-based).
  std::pair<int, int> type_a_slot(int r_idx) const;

 private:
  RootSystem() = default;
  void build(int root_cap);
  void validate() const;
  void derive_type_a_data();

  int rank_ = 0;
  std::string type_;
  LatticeTag tag_ = LatticeTag::SimplyConnected;
  bool type_a_ = false;
  std::vector<std::vector<int>> cartan_;           // cartan_[i][j] = n_{alpha_i}(alpha_j)
  std::vector<Root> roots_;
  int num_positive_ = 0;
  std::vector<int> simple_pos_;
  std::map<std::vector<int>, int> index_of_;
  std::vector<std::vector<int>> root_in_lattice_;  // column j = L-coords of alpha_j
  std::vector<std::vector<int>> diag_chars_;       // type A sc only
  std::vector<std::pair<int, int>> slots_;         // type A only, all roots
};

/// An integral lattice map phi: L -> L~, column j being the image of the j-th
/// basis vector of the source lattice in the target basis.
struct LatticeMap {
  std::vector<std::vector<int>> m;

  std::vector<int> apply(const std::vector<int>& v) const;
  long long index() const;  // |det|
};

/// The simply connected cover of RS, with the canonical map phi: L -> L~
/// satisfying phi(Phi) = Phi~ and n_r = n_{phi(r)} o phi.
std::pair<RootSystem, LatticeMap> simply_connected_cover(const RootSystem& rs);

}  // namespace f1
