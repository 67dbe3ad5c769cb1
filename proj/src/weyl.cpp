#include "f1/weyl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace f1 {

namespace {

std::vector<std::vector<int>> mat_mul_int(const std::vector<std::vector<int>>& a,
                                          const std::vector<std::vector<int>>& b) {
  size_t n = a.size();
  std::vector<std::vector<int>> r(n, std::vector<int>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

}  // namespace

WeylGroup::WeylGroup(const RootSystem& rs, int cap) : rs_(&rs), rank_(rs.rank()) {
  int nroots = rs.num_roots();

  std::vector<std::vector<int>> gen_perm(rank_, std::vector<int>(nroots));
  std::vector<std::vector<std::vector<int>>> gen_lat(rank_);
  for (int i = 0; i < rank_; ++i) {
    int si = rs.simple_index(i);
    for (int r = 0; r < nroots; ++r) gen_perm[i][r] = rs.reflect_root(si, r);
    gen_lat[i] = rs.simple_reflection_on_lattice(i);
  }

  std::vector<int> id_perm(nroots);
  for (int r = 0; r < nroots; ++r) id_perm[r] = r;
  std::vector<std::vector<int>> id_lat(rank_, std::vector<int>(rank_, 0));
  for (int i = 0; i < rank_; ++i) id_lat[i][i] = 1;

  std::map<std::vector<int>, int> seen;
  perm_.push_back(id_perm);
  word_.push_back({});
  length_.push_back(0);
  lat_.push_back(id_lat);
  seen[id_perm] = 0;

  right_.assign(rank_, -1);
  for (size_t head = 0; head < perm_.size(); ++head) {
    for (int i = 0; i < rank_; ++i) {
      // (w s_i)(r) = w(s_i(r))
      std::vector<int> np(nroots);
      for (int r = 0; r < nroots; ++r) np[r] = perm_[head][gen_perm[i][r]];
      auto it = seen.find(np);
      int idx;
      if (it == seen.end()) {
        idx = static_cast<int>(perm_.size());
        if (idx >= cap) throw std::invalid_argument("WeylGroup: cap exceeded");
        seen[np] = idx;
        perm_.push_back(np);
        std::vector<int> w = word_[head];
        w.push_back(i);
        word_.push_back(std::move(w));
        length_.push_back(length_[head] + 1);
        lat_.push_back(mat_mul_int(lat_[head], gen_lat[i]));
        right_.resize(perm_.size() * rank_, -1);
      } else {
        idx = it->second;
      }
      right_[head * rank_ + i] = idx;
    }
  }

  int n = size();
  // sanity: BFS depth equals inversion count
  for (int w = 0; w < n; ++w)
    if (length_[w] != static_cast<int>(inversion_set(w).size()))
      throw std::logic_error("WeylGroup: word length != inversion count");

  left_.assign(n * rank_, -1);
  inverse_.assign(n, -1);
  for (int w = 0; w < n; ++w) {
    for (int i = 0; i < rank_; ++i) {
      std::vector<int> np(nroots);
      for (int r = 0; r < nroots; ++r) np[r] = gen_perm[i][perm_[w][r]];
      left_[w * rank_ + i] = seen.at(np);
    }
    std::vector<int> ip(nroots);
    for (int r = 0; r < nroots; ++r) ip[perm_[w][r]] = r;
    inverse_[w] = seen.at(ip);
  }

  size_ = n;
  mult_.assign(n * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int w = a;
      for (int i : word_[b]) w = right_mul_gen(w, i);
      mult_[a * n + b] = w;
    }

  refl_of_root_.assign(nroots, -1);
  for (int r = 0; r < nroots; ++r) {
    std::vector<int> sp(nroots);
    for (int x = 0; x < nroots; ++x) sp[x] = rs.reflect_root(r, x);
    refl_of_root_[r] = seen.at(sp);
  }
}

int WeylGroup::reflection(int r_idx) const { return refl_of_root_[r_idx]; }

std::vector<int> WeylGroup::inversion_set(int w) const {
  std::vector<int> inv;
  for (int r = 0; r < rs_->num_positive(); ++r)
    if (!rs_->is_positive(perm_[w][r])) inv.push_back(r);
  return inv;
}

int WeylGroup::longest_element() const {
  int best = 0;
  for (int w = 1; w < size(); ++w)
    if (length_[w] > length_[best]) best = w;
  return best;
}

Poly WeylGroup::poincare_polynomial() const {
  std::vector<long long> c(rs_->num_positive() + 1, 0);
  for (int w = 0; w < size(); ++w) c[length_[w]] += 1;
  return Poly(std::move(c));
}

std::vector<std::vector<int>> WeylGroup::coxeter_matrix() const {
  int l = rank_;
  std::vector<std::vector<int>> m(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      int count = 0;
      for (int r = 0; r < rs_->num_roots(); ++r) {
        const auto& c = rs_->root(r).coord;
        bool in_span = true;
        for (int k = 0; k < l; ++k)
          if (k != i && k != j && c[k] != 0) in_span = false;
        if (in_span) ++count;
      }
      if (count % 2 != 0) throw std::logic_error("WeylGroup: odd root count in rank-2 span");
      m[i][j] = count / 2;
      // cross-check: m_ij is the order of s_i s_j
      int si = reflection(rs_->simple_index(i));
      int sj = reflection(rs_->simple_index(j));
      int prod = mul(si, sj);
      int x = prod, order = 1;
      while (x != identity()) {
        x = mul(x, prod);
        ++order;
      }
      if (order != m[i][j]) throw std::logic_error("WeylGroup: Coxeter entry != order of s_i s_j");
    }
  return m;
}

std::vector<std::vector<int>> WeylGroup::reduced_words(int w) const {
  if (w == identity()) return {{}};
  std::vector<std::vector<int>> out;
  for (int i = 0; i < rank_; ++i) {
    int v = left_mul_gen(i, w);  // w = s_i v when this shortens
    if (length_[v] == length_[w] - 1)
      for (auto& tail : reduced_words(v)) {
        std::vector<int> word{i};
        word.insert(word.end(), tail.begin(), tail.end());
        out.push_back(std::move(word));
      }
  }
  return out;
}

std::string WeylGroup::word_str(int w) const {
  if (word_[w].empty()) return "e";
  std::string s;
  for (int i : word_[w]) s += std::to_string(i + 1);
  return s;
}

}  // namespace f1
