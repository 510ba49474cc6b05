#include "casorati/casoratian.hpp"

#include <stdexcept>

namespace casorati {

Poly fractionFreeDet(const Matrix<Poly>& m) { return fractionFreeDeterminant<Poly>(m, Poly(1)); }

Rational fractionFreeDet(const Matrix<Rational>& m) { return fractionFreeDeterminant<Rational>(m, Rational(1)); }

BigFloat numericDeterminant(Matrix<BigFloat> m, long precisionBits) {
  const std::size_t n = m.size();
  BigFloat det(1, precisionBits);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (m[r][k].abs() > m[piv][k].abs()) piv = r;
    if (m[piv][k].isZero()) return BigFloat(precisionBits);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m[r][k].isZero()) continue;
      BigFloat f = m[r][k] / m[k][k];
      for (std::size_t c = k + 1; c < n; ++c) m[r][c] -= f * m[k][c];
    }
  }
  return det;
}

BigFloat gridDeterminant(const Matrix<BigFloat>& m) {
  long prec = m.empty() ? kDefaultPrecisionBits : m[0][0].precision();
  return numericDeterminant(m, prec);
}

Rational gridDeterminant(const Matrix<Rational>& m) { return fractionFreeDet(m); }

namespace {
void applyFault(Matrix<Poly>& m, const EntryFault* fault) {
  if (!fault || m.empty()) return;
  if (fault->row >= m.size() || fault->col >= m.size()) return;
  m[fault->row][fault->col] += Poly(fault->delta);
}
}  // namespace

ExpPoly wronskian(const std::vector<ExpPoly>& fs, const EntryFault* fault) {
  const std::size_t n = fs.size();
  if (n == 0) return ExpPoly(Poly(1));
  Matrix<Poly> m(n, std::vector<Poly>(n));
  Rational sumA, sumB;
  for (std::size_t k = 0; k < n; ++k) {
    const ExpPoly& f = fs[k];
    sumA += f.a;
    sumB += f.b;
    const bool plain = sgn(f.a) == 0 && sgn(f.b) == 0;
    const Poly slope = f.exponentSlope();
    Poly cur = f.p;
    for (std::size_t j = 0; j < n; ++j) {
      m[j][k] = cur;
      if (j + 1 < n) cur = plain ? cur.derivative() : cur.derivative() + slope * cur;
    }
  }
  applyFault(m, fault);
  return ExpPoly(fractionFreeDet(m), sumA, sumB);
}

Poly wronskianPoly(const std::vector<Poly>& fs) {
  std::vector<ExpPoly> e(fs.begin(), fs.end());
  return wronskian(e).p;
}

ExpPolyRatio wronskianRatio(const std::vector<ExpPolyRatio>& fs) {
  const std::size_t n = fs.size();
  if (n == 0) return ExpPolyRatio(ExpPoly(Poly(1)));
  Matrix<Poly> m(n, std::vector<Poly>(n));
  Rational sumA, sumB;
  Poly denominator(1);
  for (std::size_t k = 0; k < n; ++k) {
    const ExpPolyRatio& f = fs[k];
    sumA += f.a;
    sumB += f.b;
    const Poly& q = f.r.den();
    const Poly dq = q.derivative();
    const Poly slope(std::vector<Gaussian>{Gaussian(f.b), Gaussian(f.a)});
    // d^j (T_0/q) e^phi = (T_j / q^{j+1}) e^phi
    Poly t = f.r.num();
    for (std::size_t j = 0; j < n; ++j) {
      m[j][k] = t * q.pow(static_cast<int>(n - 1 - j));
      if (j + 1 < n) {
        Poly next = t.derivative() * q - Gaussian(static_cast<long>(j + 1)) * (t * dq);
        if (!slope.isZero()) next += slope * t * q;
        t = std::move(next);
      }
    }
    denominator *= q.pow(static_cast<int>(n));
  }
  return ExpPolyRatio(RationalFn(fractionFreeDet(m), denominator), sumA, sumB);
}

Gaussian imagUnitPower(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return Gaussian(1);
    case 1: return Gaussian(Rational(0), Rational(1));
    case 2: return Gaussian(-1);
    default: return Gaussian(Rational(0), Rational(-1));
  }
}

Gaussian imaginaryShift(long n, long j, const Rational& gamma) {
  Rational offset = Rational(n + 1, 2) - j;
  offset.canonicalize();
  return Gaussian(Rational(0), offset * gamma);
}

Poly casoratianImag(const std::vector<Poly>& fs, const Rational& gamma, const EntryFault* fault) {
  if (sgn(gamma) == 0) throw std::invalid_argument("imaginary-shift Casoratian needs a nonzero gamma");
  const long n = static_cast<long>(fs.size());
  if (n == 0) return Poly(1);
  Matrix<Poly> m(static_cast<std::size_t>(n), std::vector<Poly>(static_cast<std::size_t>(n)));
  for (long j = 1; j <= n; ++j) {
    const Gaussian delta = imaginaryShift(n, j, gamma);
    for (long k = 0; k < n; ++k) m[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k)] = fs[k].shifted(delta);
  }
  applyFault(m, fault);
  return fractionFreeDet(m) * imagUnitPower(n * (n - 1) / 2);
}

Poly casoratianReal(const std::vector<Poly>& fs, const EntryFault* fault) {
  const long n = static_cast<long>(fs.size());
  if (n == 0) return Poly(1);
  Matrix<Poly> m(static_cast<std::size_t>(n), std::vector<Poly>(static_cast<std::size_t>(n)));
  for (long j = 0; j < n; ++j)
    for (long k = 0; k < n; ++k) m[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = fs[k].shifted(Gaussian(j));
  applyFault(m, fault);
  return fractionFreeDet(m);
}

}  // namespace casorati
