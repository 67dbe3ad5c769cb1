#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace f1 {

/// Reduced fraction with positive denominator. Doubles as an exact root of
/// unity exp(2*pi*i*num/den) when normalized into [0,1) via mod1().
struct Frac {
  long long num = 0;
  long long den = 1;

  Frac() = default;
  Frac(long long n, long long d) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den == 0) throw std::invalid_argument("Frac: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  Frac mod1() const {
    long long n = num % den;
    if (n < 0) n += den;
    return Frac(n, den);
  }

  friend Frac operator+(const Frac& a, const Frac& b) {
    return Frac(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Frac operator-(const Frac& a, const Frac& b) {
    return Frac(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Frac operator*(const Frac& a, const Frac& b) {
    return Frac(a.num * b.num, a.den * b.den);
  }
  friend Frac operator*(long long k, const Frac& a) { return Frac(k * a.num, a.den); }
  friend bool operator==(const Frac& a, const Frac& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Frac& a, const Frac& b) {
    return a.num * b.den < b.num * a.den;
  }

  bool is_integer() const { return den == 1; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

/// Angle addition in Q/Z: the product of the two roots of unity.
inline Frac angle_add(const Frac& a, const Frac& b) { return (a + b).mod1(); }

/// The angle of -1.
inline Frac angle_half() { return Frac(1, 2); }

/// An affine coordinate after character evaluation: an exact root of unity
/// (given by its angle in [0,1)) or zero.
struct CycScalar {
  bool zero = true;
  Frac angle;  // meaningful only when !zero

  static CycScalar make_zero() { return CycScalar{}; }
  static CycScalar root(const Frac& a) { return CycScalar{false, a.mod1()}; }

  friend bool operator==(const CycScalar& x, const CycScalar& y) {
    if (x.zero != y.zero) return false;
    return x.zero || x.angle == y.angle;
  }
  friend bool operator<(const CycScalar& x, const CycScalar& y) {
    if (x.zero != y.zero) return x.zero;
    return !x.zero && x.angle < y.angle;
  }

  std::string str() const { return zero ? "0" : "e(" + angle.str() + ")"; }
};

}  // namespace f1
