#include "f1/monoid.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace f1 {

namespace {

// Discrete-log tables for a cyclic unit group given by (codes, mul), using the
// smallest generator in code order. Returns false if no generator exists.
bool cyclic_tables(const std::vector<int>& units, int one,
                   const std::function<int(int, int)>& mul, std::vector<int>& exp_table) {
  int n = static_cast<int>(units.size());
  for (int g : units) {
    exp_table.clear();
    exp_table.push_back(one);
    int x = g;
    while (x != one && static_cast<int>(exp_table.size()) <= n) {
      exp_table.push_back(x);
      x = mul(x, g);
    }
    if (static_cast<int>(exp_table.size()) == n) return true;
  }
  return false;
}

}  // namespace

MonoidWithZero MonoidWithZero::adjoin_zero(const AbelianGroup& D) {
  MonoidWithZero m;
  m.kind_ = Kind::AdjoinedZero;
  m.D_ = &D;
  m.size_ = D.size() + 1;
  m.one_ = D.zero() + 1;
  m.eps_ = D.eps() + 1;
  m.unit_index_.assign(m.size_, -1);
  m.unit_code_.assign(D.size(), 0);
  for (int g = 0; g < D.size(); ++g) {
    m.unit_index_[g + 1] = g;
    m.unit_code_[g] = g + 1;
  }
  return m;
}

MonoidWithZero MonoidWithZero::of_field(const FiniteField& F) {
  MonoidWithZero m;
  m.kind_ = Kind::FieldUnits;
  m.field_ = &F;
  m.size_ = F.q();
  m.one_ = F.one();
  m.eps_ = F.from_int(-1);
  int n = F.q() - 1;
  std::vector<int> units;
  for (int a = 1; a < F.q(); ++a) units.push_back(a);
  std::vector<int> exp_table;
  if (!cyclic_tables(units, F.one(), [&](int a, int b) { return F.mul(a, b); }, exp_table))
    throw std::logic_error("MonoidWithZero: field unit group not cyclic");
  int eps_dlog = 0;
  for (int i = 0; i < n; ++i)
    if (exp_table[i] == m.eps_) eps_dlog = i;
  m.owned_units_ = std::make_unique<AbelianGroup>(std::vector<int>{n}, std::vector<int>{eps_dlog});
  m.unit_index_.assign(m.size_, -1);
  m.unit_code_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    m.unit_index_[exp_table[i]] = i;
    m.unit_code_[i] = exp_table[i];
  }
  return m;
}

MonoidWithZero MonoidWithZero::of_mod_ring(const ModRing& R) {
  MonoidWithZero m;
  m.kind_ = Kind::ModUnits;
  m.mod_ = R.m();
  m.size_ = R.m();
  if (R.m() == 1) {
    // zero ring: 1 = 0
    m.one_ = 0;
    m.eps_ = 0;
    m.unit_index_.assign(1, -1);
    m.unit_index_[0] = 0;
    m.unit_code_.assign(1, 0);
    m.owned_units_ = std::make_unique<AbelianGroup>(AbelianGroup::trivial());
    return m;
  }
  m.one_ = 1;
  m.eps_ = R.from_int(-1);
  std::vector<int> units;
  for (int a = 0; a < R.m(); ++a)
    if (R.is_unit(a)) units.push_back(a);
  int n = static_cast<int>(units.size());
  std::vector<int> exp_table;
  m.unit_index_.assign(m.size_, -1);
  m.unit_code_.assign(n, 0);
  if (cyclic_tables(units, 1, [&](int a, int b) { return R.mul(a, b); }, exp_table)) {
    int eps_dlog = 0;
    for (int i = 0; i < n; ++i)
      if (exp_table[i] == m.eps_) eps_dlog = i;
    m.owned_units_ = std::make_unique<AbelianGroup>(std::vector<int>{n},
                                                    std::vector<int>{eps_dlog});
    for (int i = 0; i < n; ++i) {
      m.unit_index_[exp_table[i]] = i;
      m.unit_code_[i] = exp_table[i];
    }
  } else {
    // non-cyclic unit group: codes still classified, abstract structure not exposed
    for (int i = 0; i < n; ++i) {
      m.unit_index_[units[i]] = i;
      m.unit_code_[i] = units[i];
    }
  }
  return m;
}

int MonoidWithZero::mul(int a, int b) const {
  if (a == 0 || b == 0) return 0;
  switch (kind_) {
    case Kind::AdjoinedZero:
      return D_->add(a - 1, b - 1) + 1;
    case Kind::FieldUnits:
      return field_->mul(a, b);
    case Kind::ModUnits:
      return static_cast<int>((1LL * a * b) % mod_);
  }
  return 0;
}

const AbelianGroup& MonoidWithZero::unit_group() const {
  if (kind_ == Kind::AdjoinedZero) return *D_;
  if (!owned_units_) throw std::logic_error("MonoidWithZero: unit group structure unavailable");
  return *owned_units_;
}

int MonoidWithZero::unit_index(int code) const {
  int i = unit_index_[code];
  if (i < 0) throw std::domain_error("MonoidWithZero: not a unit");
  return i;
}

int MonoidWithZero::unit_code(int uidx) const {
  if (kind_ == Kind::AdjoinedZero) return uidx + 1;
  return unit_code_[uidx];
}

std::string MonoidWithZero::str(int a) const {
  if (a == 0) return "0";
  if (kind_ == Kind::AdjoinedZero) return D_->str(a - 1);
  return std::to_string(a);
}

}  // namespace f1
