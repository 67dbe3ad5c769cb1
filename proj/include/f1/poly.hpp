#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace f1 {

/// Univariate polynomial with exact 64-bit integer coefficients.
/// Coefficient i is the coefficient of x^i; trailing zeros are trimmed.
struct Poly {
  std::vector<long long> c;

  Poly() = default;
  explicit Poly(std::vector<long long> coeffs) : c(std::move(coeffs)) { trim(); }
  static Poly constant(long long v) { return Poly({v}); }
  static Poly x() { return Poly({0, 1}); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  int degree() const { return c.empty() ? -1 : static_cast<int>(c.size()) - 1; }
  long long coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : 0;
  }
  bool is_zero() const { return c.empty(); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<long long> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<long long> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<long long> r(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return Poly(std::move(r));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

  Poly pow(int e) const {
    Poly r = Poly::constant(1);
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
  }

  long long eval(long long x) const {
    long long r = 0;
    for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
  }

  /// Substitute x -> g(x).
  Poly compose(const Poly& g) const {
    Poly r;
    for (size_t i = c.size(); i-- > 0;) r = r * g + Poly::constant(c[i]);
    return r;
  }

  std::string str(const std::string& var = "q") const {
    if (c.empty()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      long long v = coeff(i);
      if (v == 0) continue;
      if (!s.empty()) s += v > 0 ? " + " : " - ";
      else if (v < 0) s += "-";
      long long a = v < 0 ? -v : v;
      if (i == 0)
        s += std::to_string(a);
      else {
        if (a != 1) s += std::to_string(a) + "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }
};

/// Dense bivariate polynomial over Z with a hard degree cap per variable.
/// Exceeding the cap during multiplication is an error, not silent truncation.
struct Poly2 {
  int cap = 0;                // max degree in each variable
  std::vector<long long> c;   // (cap+1)^2 entries, index dt*(cap+1)+du

  Poly2() = default;
  explicit Poly2(int cap_) : cap(cap_), c((cap_ + 1) * (cap_ + 1), 0) {}

  long long& at(int dt, int du) { return c[dt * (cap + 1) + du]; }
  long long get(int dt, int du) const { return c[dt * (cap + 1) + du]; }

  static Poly2 constant(int cap, long long v) {
    Poly2 p(cap);
    p.at(0, 0) = v;
    return p;
  }
  static Poly2 var_t(int cap) {
    Poly2 p(cap);
    p.at(1, 0) = 1;
    return p;
  }
  static Poly2 var_u(int cap) {
    Poly2 p(cap);
    p.at(0, 1) = 1;
    return p;
  }

  bool is_zero() const {
    for (long long v : c)
      if (v != 0) return false;
    return true;
  }

  friend Poly2 operator+(const Poly2& a, const Poly2& b) {
    Poly2 r(a.cap);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend Poly2 operator-(const Poly2& a, const Poly2& b) {
    Poly2 r(a.cap);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r(a.cap);
    for (int i = 0; i <= a.cap; ++i)
      for (int j = 0; j <= a.cap; ++j) {
        if (a.get(i, j) == 0) continue;
        for (int k = 0; k <= b.cap; ++k)
          for (int l = 0; l <= b.cap; ++l) {
            if (b.get(k, l) == 0) continue;
            if (i + k > r.cap || j + l > r.cap)
              throw std::overflow_error("Poly2: degree cap exceeded");
            r.at(i + k, j + l) += a.get(i, j) * b.get(k, l);
          }
      }
    return r;
  }
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.cap == b.cap && a.c == b.c; }

  long long eval(long long t, long long u) const {
    long long r = 0;
    for (int i = 0; i <= cap; ++i)
      for (int j = 0; j <= cap; ++j) {
        if (get(i, j) == 0) continue;
        long long m = get(i, j);
        for (int a = 0; a < i; ++a) m *= t;
        for (int a = 0; a < j; ++a) m *= u;
        r += m;
      }
    return r;
  }

  std::string str() const {
    std::string s;
    for (int i = 0; i <= cap; ++i)
      for (int j = 0; j <= cap; ++j) {
        long long v = get(i, j);
        if (v == 0) continue;
        if (!s.empty()) s += v > 0 ? " + " : " - ";
        else if (v < 0) s += "-";
        long long a = v < 0 ? -v : v;
        std::string mono;
        if (i > 0) mono += "t" + (i > 1 ? "^" + std::to_string(i) : "");
        if (j > 0) mono += std::string(i > 0 ? "*" : "") + "u" + (j > 1 ? "^" + std::to_string(j) : "");
        if (mono.empty()) mono = std::to_string(a);
        else if (a != 1) mono = std::to_string(a) + "*" + mono;
        s += mono;
      }
    return s.empty() ? "0" : s;
  }
};

/// Ring-object wrapper so Poly2 can be used as a matrix scalar.
struct PolyRing2 {
  using Elem = Poly2;
  int cap;

  explicit PolyRing2(int cap_) : cap(cap_) {}
  Elem zero() const { return Poly2(cap); }
  Elem one() const { return Poly2::constant(cap, 1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return zero() - a; }
  Elem from_int(long long v) const { return Poly2::constant(cap, v); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  Elem inv(const Elem& a) const {
    if (eq(a, one())) return a;
    Elem m = neg(one());
    if (eq(a, m)) return a;
    throw std::domain_error("PolyRing2: only units +/-1 are invertible");
  }
  std::string str(const Elem& a) const { return a.str(); }
};

}  // namespace f1
