#include "casorati/tridiagonal.hpp"

#include <stdexcept>

namespace casorati {

long sturmCount(const SymTridiagonal& t, const BigFloat& lambda) {
  const std::size_t n = t.size();
  const long prec = lambda.precision();
  // a zero pivot is nudged off zero, the usual LDL^T trick
  const BigFloat tiny = BigFloat(1, prec) / BigFloat(2, prec).pow(prec);
  long count = 0;
  BigFloat d(prec);
  for (std::size_t i = 0; i < n; ++i) {
    d = t.diag[i] - lambda - (i ? t.off[i - 1] * t.off[i - 1] / d : BigFloat(0, prec));
    if (d.isZero()) d = -tiny;
    if (d.sign() < 0) ++count;
  }
  return count;
}

std::vector<BigFloat> lowestEigenvalues(const SymTridiagonal& t, long k, const BigFloat& tol) {
  const std::size_t n = t.size();
  if (k > static_cast<long>(n)) throw std::invalid_argument("more eigenvalues requested than the matrix size");
  const long prec = tol.precision();
  // Gershgorin interval
  BigFloat lo = t.diag[0], hi = t.diag[0];
  for (std::size_t i = 0; i < n; ++i) {
    BigFloat r(0, prec);
    if (i) r += t.off[i - 1].abs();
    if (i + 1 < n) r += t.off[i].abs();
    if (t.diag[i] - r < lo) lo = t.diag[i] - r;
    if (t.diag[i] + r > hi) hi = t.diag[i] + r;
  }
  std::vector<BigFloat> out;
  const BigFloat two(2, prec);
  for (long j = 0; j < k; ++j) {
    // smallest lambda with count(lambda) > j
    BigFloat a = lo, b = hi + BigFloat(1, prec);
    while (b - a > tol) {
      BigFloat mid = (a + b) / two;
      if (sturmCount(t, mid) > j) b = mid;
      else a = mid;
    }
    out.push_back((a + b) / two);
  }
  return out;
}

Matrix<long> shiftMatrix(long rows, long cols, int direction) {
  Matrix<long> m(static_cast<std::size_t>(rows), std::vector<long>(static_cast<std::size_t>(cols), 0));
  for (long x = 0; x < rows; ++x) {
    const long y = x + direction;
    if (y >= 0 && y < cols) m[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 1;
  }
  return m;
}

Matrix<long> multiply(const Matrix<long>& a, const Matrix<long>& b) {
  const std::size_t r = a.size(), inner = b.size(), c = b.empty() ? 0 : b[0].size();
  Matrix<long> out(r, std::vector<long>(c, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < inner; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

bool isIdentity(const Matrix<long>& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace casorati
