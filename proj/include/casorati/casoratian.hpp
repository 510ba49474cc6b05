#pragma once

#include "casorati/determinant.hpp"
#include "casorati/exp_poly.hpp"
#include "casorati/grid.hpp"

#include <string>
#include <vector>

namespace casorati {

// Adds `delta` to one entry of the (reduced) determinant matrix before the
// determinant is taken. Used by negative controls only.
struct EntryFault {
  std::size_t row = 0;
  std::size_t col = 0;
  Gaussian delta = Gaussian(1);
};

// W[f_1..f_n] = det(d^{j-1} f_k). Column exponentials are factored out, so the
// result carries the sum of the columns' exponent pairs.
ExpPoly wronskian(const std::vector<ExpPoly>& fs, const EntryFault* fault = nullptr);
Poly wronskianPoly(const std::vector<Poly>& fs);
// Wronskian of quotients; columns are brought to polynomial form by scaling
// with powers of their denominators.
ExpPolyRatio wronskianRatio(const std::vector<ExpPolyRatio>& fs);

// i((n+1)/2 - j) gamma, the offset of x_j^{(n)} from x (j is 1-based).
Gaussian imaginaryShift(long n, long j, const Rational& gamma);
// i^k
Gaussian imagUnitPower(long k);

// W_gamma[f_1..f_n] = i^{n(n-1)/2} det f_k(x_j^{(n)}).
Poly casoratianImag(const std::vector<Poly>& fs, const Rational& gamma, const EntryFault* fault = nullptr);

// W_C[f_1..f_n] = det f_k(x+j-1).
Poly casoratianReal(const std::vector<Poly>& fs, const EntryFault* fault = nullptr);

BigFloat gridDeterminant(const Matrix<BigFloat>& m);
Rational gridDeterminant(const Matrix<Rational>& m);

// Grid version: the result lives on {0, ..., xMax - n + 1}. An empty list
// gives the constant 1 on {0, ..., emptyWindow}.
template <class T>
GridFn<T> casoratianReal(const std::vector<GridFn<T>>& fs, const T& one, long emptyWindow = 0) {
  const long n = static_cast<long>(fs.size());
  GridFn<T> out;
  if (n == 0) {
    out.values.assign(static_cast<std::size_t>(emptyWindow + 1), one);
    return out;
  }
  const long window = commonWindow(fs);
  const long last = window - n + 1;
  if (last < 0)
    throw WindowError("Casoratian of " + std::to_string(n) + " grid functions needs a window of at least " +
                      std::to_string(n) + " points, have " + std::to_string(window + 1));
  out.values.reserve(static_cast<std::size_t>(last + 1));
  Matrix<T> m(static_cast<std::size_t>(n), std::vector<T>(static_cast<std::size_t>(n), one));
  for (long x = 0; x <= last; ++x) {
    for (long j = 0; j < n; ++j)
      for (long k = 0; k < n; ++k) m[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = fs[k].at(x + j);
    out.values.push_back(gridDeterminant(m));
  }
  return out;
}

}  // namespace casorati
