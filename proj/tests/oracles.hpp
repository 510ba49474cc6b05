#pragma once

#include "casorati/determinant.hpp"
#include "casorati/identity_runner.hpp"

#include <vector>

namespace oracle {

using casorati::Matrix;

// Laplace expansion along the first row.
template <class T>
T cofactorDet(const Matrix<T>& m, const T& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  if (n == 1) return m[0][0];
  T total = T();
  for (std::size_t c = 0; c < n; ++c) {
    Matrix<T> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    T term = m[0][c] * cofactorDet(minor, one);
    if (c % 2) total = total - term;
    else total = total + term;
  }
  return total;
}

inline casorati::Poly poly(std::initializer_list<long> cs) {
  std::vector<casorati::Gaussian> g;
  for (long c : cs) g.emplace_back(c);
  return casorati::Poly(g);
}

inline casorati::Gaussian randomGaussian(casorati::SeededRng& rng, long bound) {
  return casorati::Gaussian(casorati::randomRational(rng, bound), casorati::randomRational(rng, bound));
}

}  // namespace oracle
