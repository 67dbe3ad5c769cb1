#include "f1/finite_field.hpp"

#include <map>
#include <stdexcept>

namespace f1 {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Fixed monic irreducible moduli, coefficients low degree first.
const std::map<int, std::vector<int>>& modulus_table() {
  static const std::map<int, std::vector<int>> table = {
      {4, {1, 1, 1}},        // x^2 + x + 1
      {8, {1, 1, 0, 1}},     // x^3 + x + 1
      {16, {1, 1, 0, 0, 1}}, // x^4 + x + 1
      {9, {1, 0, 1}},        // x^2 + 1
      {27, {1, 2, 0, 1}},    // x^3 + 2x + 1
      {81, {2, 1, 0, 0, 1}}, // x^4 + x + 2
      {25, {2, 0, 1}},       // x^2 + 2
      {49, {1, 0, 1}},       // x^2 + 1
  };
  return table;
}

}  // namespace

FiniteField::FiniteField(int p, int k) : p_(p), k_(k) {
  if (!is_prime(p) || (p != 2 && p != 3 && p != 5 && p != 7))
    throw std::invalid_argument("FiniteField: p must be a prime in {2,3,5,7}");
  if (k < 1) throw std::invalid_argument("FiniteField: degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  if (q > 81) throw std::invalid_argument("FiniteField: q = p^k must be <= 81");
  q_ = static_cast<int>(q);

  if (k == 1) {
    modulus_ = {0, 1};  // x
  } else {
    auto it = modulus_table().find(q_);
    if (it == modulus_table().end())
      throw std::invalid_argument("FiniteField: no modulus on file for q=" + std::to_string(q_));
    modulus_ = it->second;
  }

  auto decode = [&](int code) {
    std::vector<int> c(k_, 0);
    for (int i = 0; i < k_; ++i) {
      c[i] = code % p_;
      code /= p_;
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    int code = 0;
    for (int i = k_ - 1; i >= 0; --i) code = code * p_ + c[i];
    return code;
  };

  neg_.resize(q_);
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  for (int a = 0; a < q_; ++a) {
    auto ca = decode(a);
    std::vector<int> cn(k_);
    for (int i = 0; i < k_; ++i) cn[i] = (p_ - ca[i]) % p_;
    neg_[a] = encode(cn);
    for (int b = 0; b < q_; ++b) {
      auto cb = decode(b);
      std::vector<int> cs(k_);
      for (int i = 0; i < k_; ++i) cs[i] = (ca[i] + cb[i]) % p_;
      add_[a * q_ + b] = encode(cs);
      // multiply then reduce mod the modulus
      std::vector<int> prod(2 * k_ - 1, 0);
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
      for (int d = static_cast<int>(prod.size()) - 1; d >= k_; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < k_; ++i)
          prod[d - k_ + i] = ((prod[d - k_ + i] - c * modulus_[i]) % p_ + p_) % p_;
      }
      prod.resize(k_);
      mul_[a * q_ + b] = encode(prod);
    }
  }

  inv_.assign(q_, -1);
  for (int a = 1; a < q_; ++a) {
    for (int b = 1; b < q_; ++b) {
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = b;
        break;
      }
      if (mul_[a * q_ + b] == 0)
        throw std::logic_error("FiniteField: zero divisor; modulus not irreducible");
    }
    if (inv_[a] < 0) throw std::logic_error("FiniteField: element with no inverse");
  }
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("FiniteField: inverse of zero");
  return inv_[a];
}

FiniteField::Elem FiniteField::pow(Elem a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  Elem r = 1, base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

FiniteField::Elem FiniteField::from_int(long long v) const {
  long long r = v % p_;
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::vector<int> FiniteField::coeffs(Elem a) const {
  std::vector<int> c(k_, 0);
  for (int i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

}  // namespace f1
