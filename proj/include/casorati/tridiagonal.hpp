#pragma once

#include "casorati/bigfloat.hpp"
#include "casorati/determinant.hpp"

#include <vector>

namespace casorati {

// Real symmetric tri-diagonal matrix: diag[0..N-1], off[0..N-2].
struct SymTridiagonal {
  std::vector<BigFloat> diag;
  std::vector<BigFloat> off;
  std::size_t size() const { return diag.size(); }
};

// number of eigenvalues strictly below lambda
long sturmCount(const SymTridiagonal& t, const BigFloat& lambda);
// k lowest eigenvalues by bisection, each to absolute width tol
std::vector<BigFloat> lowestEigenvalues(const SymTridiagonal& t, long k, const BigFloat& tol);

// (e^{+d})_{x,y} = delta_{x+1,y}, (e^{-d})_{x,y} = delta_{x-1,y}, on
// rows {0..rows-1} and columns {0..cols-1} of the semi-infinite lattice
Matrix<long> shiftMatrix(long rows, long cols, int direction);
Matrix<long> multiply(const Matrix<long>& a, const Matrix<long>& b);
bool isIdentity(const Matrix<long>& m);

}  // namespace casorati
