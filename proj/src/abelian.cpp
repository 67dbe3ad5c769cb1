#include "f1/abelian.hpp"

#include <numeric>
#include <stdexcept>

namespace f1 {

AbelianGroup::AbelianGroup(std::vector<int> orders, std::vector<int> eps)
    : orders_(std::move(orders)), eps_tuple_(std::move(eps)) {
  if (orders_.empty()) throw std::invalid_argument("AbelianGroup: empty order list");
  if (eps_tuple_.size() != orders_.size())
    throw std::invalid_argument("AbelianGroup: eps arity mismatch");
  for (size_t i = 0; i < orders_.size(); ++i) {
    if (orders_[i] < 1) throw std::invalid_argument("AbelianGroup: orders must be >= 1");
    if (eps_tuple_[i] < 0 || eps_tuple_[i] >= orders_[i])
      throw std::invalid_argument("AbelianGroup: eps component out of range");
    size_ *= orders_[i];
  }
  if (size_ > 1000000) throw std::invalid_argument("AbelianGroup: group too large");
  for (size_t i = 0; i < orders_.size(); ++i)
    if ((2 * eps_tuple_[i]) % orders_[i] != 0)
      throw std::invalid_argument("AbelianGroup: eps must have order dividing 2");
  eps_ = index(eps_tuple_);
  if (size_ <= 512) {
    add_table_.resize(size_ * size_);
    neg_table_.resize(size_);
    for (int a = 0; a < size_; ++a) {
      neg_table_[a] = neg_slow(a);
      for (int b = 0; b < size_; ++b) add_table_[a * size_ + b] = add_slow(a, b);
    }
  }
}

long long AbelianGroup::exponent() const {
  long long e = 1;
  for (int m : orders_) e = std::lcm(e, static_cast<long long>(m));
  return e;
}

int AbelianGroup::index(const std::vector<int>& tuple) const {
  long long idx = 0;
  for (size_t i = 0; i < orders_.size(); ++i) idx = idx * orders_[i] + tuple[i];
  return static_cast<int>(idx);
}

std::vector<int> AbelianGroup::tuple(int idx) const {
  std::vector<int> t(orders_.size());
  for (size_t i = orders_.size(); i-- > 0;) {
    t[i] = idx % orders_[i];
    idx /= orders_[i];
  }
  return t;
}

int AbelianGroup::add_slow(int a, int b) const {
  auto ta = tuple(a), tb = tuple(b);
  for (size_t i = 0; i < orders_.size(); ++i) ta[i] = (ta[i] + tb[i]) % orders_[i];
  return index(ta);
}

int AbelianGroup::neg_slow(int a) const {
  auto t = tuple(a);
  for (size_t i = 0; i < orders_.size(); ++i) t[i] = (orders_[i] - t[i]) % orders_[i];
  return index(t);
}

int AbelianGroup::scalar(long long k, int a) const {
  if (!add_table_.empty()) {
    long long e = exponent();
    long long kk = k % e;
    if (kk < 0) kk += e;
    int r = 0;
    for (long long i = 0; i < kk; ++i) r = add_table_[r * size_ + a];
    return r;
  }
  auto t = tuple(a);
  for (size_t i = 0; i < orders_.size(); ++i) {
    long long v = (k % orders_[i]) * t[i] % orders_[i];
    if (v < 0) v += orders_[i];
    t[i] = static_cast<int>(v);
  }
  return index(t);
}

int AbelianGroup::order_of(int a) const {
  int n = 1;
  int x = a;
  while (x != 0) {
    x = add(x, a);
    ++n;
  }
  return n;
}

std::string AbelianGroup::str(int a) const {
  auto t = tuple(a);
  if (t.size() == 1) return std::to_string(t[0]);
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

std::string AbelianGroup::name() const {
  std::string s;
  for (size_t i = 0; i < orders_.size(); ++i) {
    if (i) s += "x";
    s += "Z/" + std::to_string(orders_[i]);
  }
  if (pointed()) s += ":eps=" + str(eps_);
  return s;
}

int GroupHom::apply(int a) const {
  auto t = src->tuple(a);
  int r = dst->zero();
  for (size_t i = 0; i < t.size(); ++i) r = dst->add(r, dst->scalar(t[i], gen_images[i]));
  return r;
}

bool GroupHom::is_identity() const {
  if (src != dst) return false;
  for (int a = 0; a < src->size(); ++a)
    if (apply(a) != a) return false;
  return true;
}

std::vector<GroupHom> hom_set(const AbelianGroup& src, const AbelianGroup& dst) {
  // image of generator i ranges over elements killed by orders[i]
  std::vector<std::vector<int>> candidates(src.rank());
  for (int i = 0; i < src.rank(); ++i)
    for (int y = 0; y < dst.size(); ++y)
      if (dst.scalar(src.orders()[i], y) == dst.zero()) candidates[i].push_back(y);

  bool pointed_filter = src.pointed() && dst.pointed();
  std::vector<GroupHom> out;
  std::vector<int> pick(src.rank(), 0);
  while (true) {
    GroupHom h{&src, &dst, {}};
    h.gen_images.resize(src.rank());
    for (int i = 0; i < src.rank(); ++i) h.gen_images[i] = candidates[i][pick[i]];
    if (!pointed_filter || h.apply(src.eps()) == dst.eps()) out.push_back(h);
    int i = src.rank() - 1;
    while (i >= 0 && ++pick[i] == static_cast<int>(candidates[i].size())) pick[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (f.dst != g.src) throw std::invalid_argument("compose: domain mismatch");
  GroupHom h{f.src, g.dst, {}};
  h.gen_images.resize(f.src->rank());
  for (int i = 0; i < f.src->rank(); ++i) h.gen_images[i] = g.apply(f.gen_images[i]);
  return h;
}

Frac Character::eval(int a) const {
  auto t = grp->tuple(a);
  Frac r(0, 1);
  for (size_t i = 0; i < t.size(); ++i) r = angle_add(r, (t[i] * angles[i]).mod1());
  return r;
}

std::vector<Character> characters(const AbelianGroup& D) {
  std::vector<Character> out;
  std::vector<int> num(D.rank(), 0);
  while (true) {
    Character chi{&D, {}};
    chi.angles.reserve(D.rank());
    for (int i = 0; i < D.rank(); ++i) chi.angles.push_back(Frac(num[i], D.orders()[i]).mod1());
    if (!D.pointed() || chi.is_minus_one(D.eps())) out.push_back(chi);
    int i = D.rank() - 1;
    while (i >= 0 && ++num[i] == D.orders()[i]) num[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

Character pullback(const Character& chi_prime, const GroupHom& f) {
  Character chi{f.src, {}};
  chi.angles.reserve(f.src->rank());
  for (int i = 0; i < f.src->rank(); ++i) chi.angles.push_back(chi_prime.eval(f.gen_images[i]));
  return chi;
}

}  // namespace f1
