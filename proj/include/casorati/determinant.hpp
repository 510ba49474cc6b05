#pragma once

#include "casorati/bigfloat.hpp"
#include "casorati/rational_fn.hpp"

#include <utility>
#include <vector>

namespace casorati {

template <class T>
using Matrix = std::vector<std::vector<T>>;

inline bool isZeroEntry(const Poly& p) { return p.isZero(); }
inline bool isZeroEntry(const RationalFn& f) { return f.isZero(); }
inline bool isZeroEntry(const Gaussian& g) { return g.isZero(); }
inline bool isZeroEntry(const Rational& q) { return sgn(q) == 0; }

inline Poly exactQuotient(const Poly& a, const Poly& b) { return Poly::exactDiv(a, b); }
inline RationalFn exactQuotient(const RationalFn& a, const RationalFn& b) { return a / b; }
inline Gaussian exactQuotient(const Gaussian& a, const Gaussian& b) { return a / b; }
inline Rational exactQuotient(const Rational& a, const Rational& b) { return a / b; }

// Bareiss elimination. Each division is exact in an integral domain; a zero
// pivot is replaced by a row swap, and a column with no nonzero candidate
// means the determinant vanishes.
template <class T>
T fractionFreeDeterminant(Matrix<T> m, const T& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  bool negate = false;
  T prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (isZeroEntry(m[k][k])) {
      std::size_t r = k + 1;
      while (r < n && isZeroEntry(m[r][k])) ++r;
      if (r == n) return T();
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T t = m[i][j] * m[k][k];
        t -= m[i][k] * m[k][j];
        m[i][j] = exactQuotient(t, prev);
      }
    }
    prev = m[k][k];
  }
  T det = m[n - 1][n - 1];
  if (negate) det = -det;
  return det;
}

Poly fractionFreeDet(const Matrix<Poly>& m);
Rational fractionFreeDet(const Matrix<Rational>& m);

// Gaussian elimination with partial pivoting.
BigFloat numericDeterminant(Matrix<BigFloat> m, long precisionBits);

}  // namespace casorati
