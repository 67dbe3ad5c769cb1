#include "f1/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "f1/fraction.hpp"

namespace f1 {

namespace {

std::vector<std::vector<int>> type_a_cartan(int l) {
  std::vector<std::vector<int>> c(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) {
    c[i][i] = 2;
    if (i > 0) c[i][i - 1] = -1;
    if (i + 1 < l) c[i][i + 1] = -1;
  }
  return c;
}

std::vector<std::vector<int>> named_cartan(const std::string& type) {
  if (type == "A1") return type_a_cartan(1);
  if (type == "A2") return type_a_cartan(2);
  if (type == "A3") return type_a_cartan(3);
  if (type == "A4") return type_a_cartan(4);
  if (type == "B2" || type == "C2") return {{2, -1}, {-2, 2}};
  if (type == "G2") return {{2, -1}, {-3, 2}};
  if (type == "B3") return {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}};
  if (type == "A1xA1") return {{2, 0}, {0, 2}};
  throw std::invalid_argument("RootSystem: unknown type " + type);
}

long long det_int(std::vector<std::vector<long long>> a) {
  int n = static_cast<int>(a.size());
  // Bareiss fraction-free elimination
  long long prev = 1;
  long long sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int s = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          s = i;
          break;
        }
      if (s < 0) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

RootSystem RootSystem::make(const std::string& type, LatticeTag tag, int root_cap) {
  RootSystem rs = from_cartan(named_cartan(type), tag, root_cap);
  rs.type_ = type;
  return rs;
}

RootSystem RootSystem::from_cartan(const std::vector<std::vector<int>>& cartan, LatticeTag tag,
                                   int root_cap) {
  RootSystem rs;
  rs.rank_ = static_cast<int>(cartan.size());
  rs.cartan_ = cartan;
  rs.tag_ = tag;
  for (auto& row : cartan)
    if (static_cast<int>(row.size()) != rs.rank_)
      throw std::invalid_argument("RootSystem: Cartan matrix not square");
  for (int i = 0; i < rs.rank_; ++i) {
    if (cartan[i][i] != 2) throw std::invalid_argument("RootSystem: diagonal must be 2");
    for (int j = 0; j < rs.rank_; ++j)
      if (i != j && cartan[i][j] > 0)
        throw std::invalid_argument("RootSystem: off-diagonal entries must be <= 0");
  }
  rs.type_a_ = (cartan == type_a_cartan(rs.rank_));
  rs.type_ = "custom";
  rs.build(root_cap);
  rs.validate();
  if (rs.type_a_) rs.derive_type_a_data();
  return rs;
}

void RootSystem::build(int root_cap) {
  int l = rank_;
  // embedding of the root lattice into L
  root_in_lattice_.assign(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      root_in_lattice_[i][j] = (tag_ == LatticeTag::Adjoint) ? (i == j ? 1 : 0) : cartan_[i][j];

  // simple roots, with covectors in both bases
  std::vector<Root> pool;
  for (int i = 0; i < l; ++i) {
    Root r;
    r.coord.assign(l, 0);
    r.coord[i] = 1;
    r.cov_root = cartan_[i];
    r.cov_lat.assign(l, 0);
    if (tag_ == LatticeTag::Adjoint)
      r.cov_lat = cartan_[i];
    else
      r.cov_lat[i] = 1;
    r.height = 1;
    pool.push_back(r);
  }

  std::map<std::vector<int>, int> seen;
  for (int i = 0; i < l; ++i) seen[pool[i].coord] = i;

  // closure under simple reflections; s_i(r) = r - n_{alpha_i}(r) alpha_i
  for (size_t head = 0; head < pool.size(); ++head) {
    for (int i = 0; i < l; ++i) {
      Root cur = pool[head];
      long long pairing = 0;
      for (int j = 0; j < l; ++j) pairing += static_cast<long long>(cur.coord[j]) * cartan_[i][j];
      Root img;
      img.coord = cur.coord;
      img.coord[i] -= static_cast<int>(pairing);
      img.height = 0;
      for (int v : img.coord) img.height += v;
      // n_{s_i(r)} = n_r o s_i in both bases
      img.cov_root.assign(l, 0);
      img.cov_lat.assign(l, 0);
      int nr_ai = cur.cov_root[i];
      for (int j = 0; j < l; ++j) {
        img.cov_root[j] = cur.cov_root[j] - cartan_[i][j] * nr_ai;
        int nai_vj = (tag_ == LatticeTag::Adjoint) ? cartan_[i][j] : (i == j ? 1 : 0);
        img.cov_lat[j] = cur.cov_lat[j] - nai_vj * nr_ai;
      }
      auto it = seen.find(img.coord);
      if (it == seen.end()) {
        if (static_cast<int>(pool.size()) >= root_cap)
          throw std::invalid_argument("RootSystem: root closure exceeds cap (not finite type?)");
        seen[img.coord] = static_cast<int>(pool.size());
        pool.push_back(img);
      } else {
        const Root& prev = pool[it->second];
        if (prev.cov_root != img.cov_root || prev.cov_lat != img.cov_lat)
          throw std::logic_error("RootSystem: inconsistent coroot along two reflection paths");
      }
    }
  }

  // split by sign, order positives by (height, lex)
  std::vector<Root> pos;
  for (auto& r : pool) {
    bool nonneg = std::all_of(r.coord.begin(), r.coord.end(), [](int v) { return v >= 0; });
    bool nonpos = std::all_of(r.coord.begin(), r.coord.end(), [](int v) { return v <= 0; });
    if (!nonneg && !nonpos)
      throw std::logic_error("RootSystem: root with mixed-sign coordinates");
    if (nonneg) pos.push_back(r);
  }
  std::sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coord < b.coord;
  });
  num_positive_ = static_cast<int>(pos.size());
  if (static_cast<int>(pool.size()) != 2 * num_positive_)
    throw std::logic_error("RootSystem: positives do not account for half of Phi");

  roots_ = pos;
  for (const Root& r : pos) {
    Root m;
    m.coord.resize(l);
    m.cov_root.resize(l);
    m.cov_lat.resize(l);
    for (int j = 0; j < l; ++j) {
      m.coord[j] = -r.coord[j];
      m.cov_root[j] = -r.cov_root[j];
      m.cov_lat[j] = -r.cov_lat[j];
    }
    m.height = -r.height;
    roots_.push_back(m);
  }
  index_of_.clear();
  for (int i = 0; i < static_cast<int>(roots_.size()); ++i) index_of_[roots_[i].coord] = i;

  simple_pos_.assign(l, -1);
  for (int i = 0; i < l; ++i) {
    std::vector<int> c(l, 0);
    c[i] = 1;
    simple_pos_[i] = index_of_.at(c);
  }
}

void RootSystem::validate() const {
  int n = num_roots();
  for (int i = 0; i < n; ++i) {
    const Root& r = roots_[i];
    // axiom (2): n_r(r) = 2
    long long v = 0;
    for (int j = 0; j < rank_; ++j) v += static_cast<long long>(r.cov_root[j]) * r.coord[j];
    if (v != 2) throw std::logic_error("RootSystem: axiom n_r(r)=2 fails");
    // covector consistency across the two bases: n_r(alpha_j) via L-coords
    for (int j = 0; j < rank_; ++j) {
      long long w = 0;
      for (int a = 0; a < rank_; ++a)
        w += static_cast<long long>(r.cov_lat[a]) * root_in_lattice_[a][j];
      if (w != r.cov_root[j]) throw std::logic_error("RootSystem: covector bases disagree");
    }
  }
  // axiom (3): only +/-1 rational multiples
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto& a = roots_[i].coord;
      const auto& b = roots_[j].coord;
      // b = t*a for rational t implies t = +/-1
      long long num = 0, den = 0;
      bool proportional = true;
      for (int k = 0; k < rank_ && proportional; ++k) {
        if (a[k] == 0) {
          if (b[k] != 0) proportional = false;
        } else if (den == 0) {
          num = b[k];
          den = a[k];
        } else if (static_cast<long long>(b[k]) * den != num * a[k]) {
          proportional = false;
        }
      }
      if (proportional && den != 0 && (num != den && num != -den))
        throw std::logic_error("RootSystem: axiom 3 fails (proper rational multiple in Phi)");
    }
  // axiom (4): r - n_s(r) s in Phi, all pairs
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (reflect_root(j, i) < 0) throw std::logic_error("RootSystem: axiom 4 closure fails");
  // positivity additively closed
  for (int i = 0; i < num_positive_; ++i)
    for (int j = 0; j < num_positive_; ++j) {
      std::vector<int> s(rank_);
      for (int k = 0; k < rank_; ++k) s[k] = roots_[i].coord[k] + roots_[j].coord[k];
      auto it = index_of_.find(s);
      if (it != index_of_.end() && it->second >= num_positive_)
        throw std::logic_error("RootSystem: sum of positive roots is negative");
    }
}

int RootSystem::find_root(const std::vector<int>& coord) const {
  auto it = index_of_.find(coord);
  return it == index_of_.end() ? -1 : it->second;
}

int RootSystem::reflect_root(int r_idx, int x_idx) const {
  const Root& r = roots_[r_idx];
  const Root& x = roots_[x_idx];
  long long pairing = 0;
  for (int j = 0; j < rank_; ++j) pairing += static_cast<long long>(r.cov_root[j]) * x.coord[j];
  std::vector<int> c(rank_);
  for (int j = 0; j < rank_; ++j) c[j] = x.coord[j] - static_cast<int>(pairing) * r.coord[j];
  return find_root(c);
}

long long RootSystem::pair_lat(int r_idx, const std::vector<int>& v) const {
  const Root& r = roots_[r_idx];
  long long s = 0;
  for (int j = 0; j < rank_; ++j) s += static_cast<long long>(r.cov_lat[j]) * v[j];
  return s;
}

std::vector<std::vector<int>> RootSystem::simple_reflection_on_lattice(int i) const {
  // s_i(v_b) = v_b - n_{alpha_i}(v_b) * alpha_i; column b = image of v_b
  int l = rank_;
  const Root& ai = roots_[simple_pos_[i]];
  std::vector<std::vector<int>> m(l, std::vector<int>(l, 0));
  for (int b = 0; b < l; ++b) {
    for (int a = 0; a < l; ++a)
      m[a][b] = (a == b ? 1 : 0) - ai.cov_lat[b] * root_in_lattice_[a][i];
  }
  return m;
}

const std::vector<std::vector<int>>& RootSystem::diag_chars() const {
  if (diag_chars_.empty())
    throw std::logic_error("RootSystem: diagonal characters need type A, simply connected");
  return diag_chars_;
}

std::pair<int, int> RootSystem::type_a_slot(int r_idx) const {
  if (!type_a_) throw std::logic_error("RootSystem: matrix slots are type A only");
  return slots_[r_idx];
}

void RootSystem::derive_type_a_data() {
  int l = rank_;
  // e-coordinates of a root (c_1..c_l simple-root coords):
  // e-vector w with w_1 = c_1, w_k = c_k - c_{k-1}, w_{l+1} = -c_l
  slots_.assign(num_roots(), {-1, -1});
  for (int idx = 0; idx < num_roots(); ++idx) {
    const auto& c = roots_[idx].coord;
    std::vector<int> w(l + 1, 0);
    for (int k = 0; k <= l; ++k) {
      int ck = (k < l) ? c[k] : 0;
      int ckm = (k > 0) ? c[k - 1] : 0;
      w[k] = ck - ckm;
    }
    int plus = -1, minus = -1;
    bool ok = true;
    for (int k = 0; k <= l; ++k) {
      if (w[k] == 1 && plus < 0) plus = k;
      else if (w[k] == -1 && minus < 0) minus = k;
      else if (w[k] != 0) ok = false;
    }
    if (!ok || plus < 0 || minus < 0)
      throw std::logic_error("RootSystem: type A root without e_i - e_j shape");
    slots_[idx] = {plus, minus};
  }

  if (tag_ != LatticeTag::SimplyConnected) return;

  // Solve alpha_i = e_i - e_{i+1}, sum e_i = 0 over Q, in simple-root coords:
  // e_i = sum_{j>=i} alpha_j - (1/(l+1)) sum_j j*alpha_j, then map to L-coords.
  diag_chars_.assign(l + 1, std::vector<int>(l, 0));
  for (int i = 0; i <= l; ++i) {
    std::vector<Frac> alpha_coords(l, Frac(0, 1));
    for (int j = 0; j < l; ++j) {
      long long tail = (j >= i) ? 1 : 0;  // alpha_j appears in sum_{k>=i} when j >= i
      alpha_coords[j] = Frac(tail, 1) - Frac(j + 1, l + 1);
    }
    for (int a = 0; a < l; ++a) {
      Frac v(0, 1);
      for (int j = 0; j < l; ++j)
        v = v + alpha_coords[j] * Frac(root_in_lattice_[a][j], 1);
      if (!v.is_integer())
        throw std::logic_error("RootSystem: diagonal character not integral on L");
      diag_chars_[i][a] = static_cast<int>(v.num);
    }
  }
  // consistency: n_{alpha_a}(e_i) = [i == a] - [i == a+1]
  for (int a = 0; a < l; ++a)
    for (int i = 0; i <= l; ++i) {
      long long v = pair_lat(simple_pos_[a], diag_chars_[i]);
      long long expect = (i == a ? 1 : 0) - (i == a + 1 ? 1 : 0);
      if (v != expect) throw std::logic_error("RootSystem: diagonal characters inconsistent");
    }
}

std::vector<int> LatticeMap::apply(const std::vector<int>& v) const {
  std::vector<int> out(m.size(), 0);
  for (size_t a = 0; a < m.size(); ++a) {
    long long s = 0;
    for (size_t j = 0; j < v.size(); ++j) s += static_cast<long long>(m[a][j]) * v[j];
    out[a] = static_cast<int>(s);
  }
  return out;
}

long long LatticeMap::index() const {
  std::vector<std::vector<long long>> a(m.size(), std::vector<long long>(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) a[i][j] = m[i][j];
  long long d = det_int(std::move(a));
  return d < 0 ? -d : d;
}

std::pair<RootSystem, LatticeMap> simply_connected_cover(const RootSystem& rs) {
  RootSystem cover = (rs.type_name() == "custom")
                         ? RootSystem::from_cartan(rs.cartan(), LatticeTag::SimplyConnected)
                         : RootSystem::make(rs.type_name(), LatticeTag::SimplyConnected);
  LatticeMap phi;
  int l = rs.rank();
  phi.m.assign(l, std::vector<int>(l, 0));
  if (rs.tag() == LatticeTag::SimplyConnected) {
    for (int i = 0; i < l; ++i) phi.m[i][i] = 1;
  } else {
    // alpha_j maps to alpha~_j, whose L~-coordinates are the Cartan column j
    for (int a = 0; a < l; ++a)
      for (int j = 0; j < l; ++j) phi.m[a][j] = rs.cartan()[a][j];
  }
  // check: phi(Phi) = Phi~ (same simple-root coords) and n_r = n_{phi(r)} o phi
  for (int idx = 0; idx < rs.num_roots(); ++idx) {
    const Root& r = rs.root(idx);
    int idx2 = cover.find_root(r.coord);
    if (idx2 < 0) throw std::logic_error("simply_connected_cover: root image missing");
    for (int j = 0; j < l; ++j) {
      std::vector<int> basis_img(l, 0);
      for (int a = 0; a < l; ++a) basis_img[a] = phi.m[a][j];
      if (cover.pair_lat(idx2, basis_img) != r.cov_lat[j])
        throw std::logic_error("simply_connected_cover: coroot compatibility fails");
    }
  }
  return {std::move(cover), std::move(phi)};
}

}  // namespace f1
