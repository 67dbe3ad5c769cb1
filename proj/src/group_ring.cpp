#include "f1/group_ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace f1 {

GroupRing::GroupRing(const AbelianGroup& D, bool reduce) : D_(&D), reduced_(reduce) {
  if (reduced_ && !D.pointed())
    throw std::invalid_argument("GroupRing: reduction needs a nontrivial eps");
  rep_.resize(D.size());
  sign_.resize(D.size());
  for (int g = 0; g < D.size(); ++g) {
    if (!reduced_) {
      rep_[g] = g;
      sign_[g] = 1;
    } else {
      int partner = D.add(g, D.eps());
      rep_[g] = std::min(g, partner);
      sign_[g] = (g == rep_[g]) ? 1 : -1;
    }
  }
}

GroupRing::Elem GroupRing::make(std::vector<std::pair<int, long long>> raw) const {
  std::map<int, long long> acc;
  for (auto& [g, c] : raw) acc[rep_[g]] += sign_[g] * c;
  Elem out;
  for (auto& [g, c] : acc)
    if (c != 0) out.emplace_back(g, c);
  return out;
}

GroupRing::Elem GroupRing::from_int(long long v) const {
  if (v == 0) return {};
  return make({{D_->zero(), v}});
}

GroupRing::Elem GroupRing::from_group(int idx) const { return make({{idx, 1}}); }

GroupRing::Elem GroupRing::add(const Elem& a, const Elem& b) const {
  std::vector<std::pair<int, long long>> raw(a);
  raw.insert(raw.end(), b.begin(), b.end());
  return make(std::move(raw));
}

GroupRing::Elem GroupRing::neg(const Elem& a) const {
  Elem r = a;
  for (auto& [g, c] : r) c = -c;
  return r;
}

GroupRing::Elem GroupRing::mul(const Elem& a, const Elem& b) const {
  std::vector<std::pair<int, long long>> raw;
  raw.reserve(a.size() * b.size());
  for (auto& [g1, c1] : a)
    for (auto& [g2, c2] : b) raw.emplace_back(D_->add(g1, g2), c1 * c2);
  return make(std::move(raw));
}

GroupRing::Elem GroupRing::inv(const Elem& a) const {
  if (a.size() == 1 && (a[0].second == 1 || a[0].second == -1))
    return make({{D_->neg(a[0].first), a[0].second}});
  throw std::domain_error("GroupRing: only monomial units +/-g are invertible");
}

std::string GroupRing::str(const Elem& a) const {
  if (a.empty()) return "0";
  std::string s;
  for (auto& [g, c] : a) {
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    long long m = c < 0 ? -c : c;
    if (m != 1) s += std::to_string(m) + "*";
    s += "[" + D_->str(g) + "]";
  }
  return s;
}

CharacterTarget make_character_target(const AbelianGroup& D, const Character& chi) {
  CharacterTarget t;
  t.M = D.exponent();
  if (t.M == 1) t.M = 1;
  int eps_cyc = 0;
  if (D.pointed()) {
    if (t.M % 2 != 0) throw std::logic_error("pointed group with odd exponent");
    eps_cyc = static_cast<int>(t.M / 2);
  }
  t.cyc = std::make_unique<AbelianGroup>(std::vector<int>{static_cast<int>(t.M)},
                                         std::vector<int>{eps_cyc});
  t.ring = std::make_unique<GroupRing>(*t.cyc, D.pointed());
  t.image.resize(D.size());
  for (int g = 0; g < D.size(); ++g) {
    Frac a = chi.eval(g);
    if (t.M % a.den != 0) throw std::logic_error("character angle outside 1/M lattice");
    t.image[g] = static_cast<int>((a.num * (t.M / a.den)) % t.M);
  }
  return t;
}

GroupRing::Elem CharacterTarget::map_elem(const GroupRing& src, const GroupRing::Elem& a) const {
  (void)src;
  std::vector<std::pair<int, long long>> raw;
  for (auto& [g, c] : a) raw.emplace_back(image[g], c);
  return ring->make(std::move(raw));
}

ModRing::ModRing(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("ModRing: modulus must be >= 1");
}

ModRing::Elem ModRing::from_int(long long v) const {
  long long r = v % m_;
  if (r < 0) r += m_;
  return static_cast<Elem>(r);
}

bool ModRing::is_unit(Elem a) const { return std::gcd(a == 0 ? m_ : a, m_) == 1; }

ModRing::Elem ModRing::inv(Elem a) const {
  if (!is_unit(a)) throw std::domain_error("ModRing: not a unit");
  for (int b = 0; b < m_; ++b)
    if (mul(a, b) == one()) return b;
  throw std::logic_error("ModRing: inverse not found");
}

}  // namespace f1
