#pragma once

#include "casorati/gaussian.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace casorati {

// Dense univariate polynomial over the Gaussian rationals.
// coeffs_[k] multiplies x^k; the leading coefficient is never zero.
class Poly {
 public:
  Poly() = default;
  Poly(const Gaussian& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Gaussian(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Gaussian> coeffs);

  static Poly x();
  static Poly monomial(const Gaussian& c, int k);
  // Coefficients listed from the constant term upward.
  static Poly fromRationals(const std::vector<Rational>& coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool isZero() const { return coeffs_.empty(); }
  bool isConstant() const { return coeffs_.size() <= 1; }
  bool isReal() const;
  const std::vector<Gaussian>& coeffs() const { return coeffs_; }
  Gaussian coeff(int k) const;
  const Gaussian& lead() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Gaussian& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Gaussian& c) { return a *= c; }
  friend Poly operator*(const Gaussian& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Gaussian operator()(const Gaussian& at) const;

  Poly derivative() const;
  // q(x) = p(x + delta)
  Poly shifted(const Gaussian& delta) const;
  // coefficientwise complex conjugation
  Poly conj() const;
  Poly pow(int e) const;
  Poly monic() const;

  // Euclidean division over the field: a = q*b + r, deg r < deg b.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  // Throws std::domain_error when b does not divide a.
  static Poly exactDiv(const Poly& a, const Poly& b);

  // Largest coefficient size in bits.
  std::size_t bitSize() const;

  std::string str() const;

  friend int compare(const Poly& a, const Poly& b);

 private:
  void trim();
  std::vector<Gaussian> coeffs_;
};

// Monic gcd (zero when both inputs are zero).
Poly gcd(Poly a, Poly b);

Poly polyShift(const Poly& p, const Gaussian& delta);
Poly polyDerivative(const Poly& p);

struct PolyLess {
  bool operator()(const Poly& a, const Poly& b) const { return compare(a, b) < 0; }
};

}  // namespace casorati
