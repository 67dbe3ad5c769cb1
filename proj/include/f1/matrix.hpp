#pragma once

#include <string>
#include <vector>

namespace f1 {

/// Square matrix over a ring object R (R supplies Elem, add/mul/..., so the
/// same code runs over F_q, Z[D,eps], Z/m and Z[t,u]).
template <class R>
struct Mat {
  int n = 0;
  std::vector<typename R::Elem> a;

  Mat() = default;
  Mat(const R& ring, int n_) : n(n_), a(n_ * n_, ring.zero()) {}

  typename R::Elem& at(int i, int j) { return a[i * n + j]; }
  const typename R::Elem& at(int i, int j) const { return a[i * n + j]; }

  friend bool operator<(const Mat& x, const Mat& y) { return x.a < y.a; }
  friend bool operator==(const Mat& x, const Mat& y) { return x.n == y.n && x.a == y.a; }
};

template <class R>
Mat<R> mat_identity(const R& ring, int n) {
  Mat<R> m(ring, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = ring.one();
  return m;
}

template <class R>
Mat<R> mat_mul(const R& ring, const Mat<R>& x, const Mat<R>& y) {
  Mat<R> r(ring, x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      if (ring.is_zero(x.at(i, k))) continue;
      for (int j = 0; j < x.n; ++j)
        r.at(i, j) = ring.add(r.at(i, j), ring.mul(x.at(i, k), y.at(k, j)));
    }
  return r;
}

template <class R>
bool mat_eq(const R& ring, const Mat<R>& x, const Mat<R>& y) {
  if (x.n != y.n) return false;
  for (size_t i = 0; i < x.a.size(); ++i)
    if (!ring.eq(x.a[i], y.a[i])) return false;
  return true;
}

template <class R>
bool mat_is_identity(const R& ring, const Mat<R>& x) {
  return mat_eq(ring, x, mat_identity(ring, x.n));
}

/// Determinant by cofactor expansion; exact over any commutative ring
/// (dimensions here stay <= 5).
template <class R>
typename R::Elem mat_det(const R& ring, const Mat<R>& m) {
  if (m.n == 1) return m.at(0, 0);
  typename R::Elem d = ring.zero();
  for (int j = 0; j < m.n; ++j) {
    if (ring.is_zero(m.at(0, j))) continue;
    Mat<R> minor(ring, m.n - 1);
    for (int i = 1; i < m.n; ++i) {
      int cc = 0;
      for (int c = 0; c < m.n; ++c) {
        if (c == j) continue;
        minor.at(i - 1, cc++) = m.at(i, c);
      }
    }
    typename R::Elem term = ring.mul(m.at(0, j), mat_det(ring, minor));
    d = (j % 2 == 0) ? ring.add(d, term) : ring.sub(d, term);
  }
  return d;
}

template <class R>
Mat<R> mat_transpose(const R& ring, const Mat<R>& m) {
  Mat<R> r(ring, m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

template <class R>
std::string mat_str(const R& ring, const Mat<R>& m) {
  std::string s = "[";
  for (int i = 0; i < m.n; ++i) {
    if (i) s += "; ";
    for (int j = 0; j < m.n; ++j) {
      if (j) s += ",";
      s += ring.str(m.at(i, j));
    }
  }
  return s + "]";
}

}  // namespace f1
