#pragma once

#include "casorati/poly.hpp"

#include <string>

namespace casorati {

// Reduced quotient num/den with a monic denominator.
class RationalFn {
 public:
  RationalFn() : den_(1) {}
  RationalFn(const Poly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFn(const Gaussian& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFn(long c) : RationalFn(Gaussian(c)) {}  // NOLINT(google-explicit-constructor)
  RationalFn(const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool isZero() const { return num_.isZero(); }
  bool isPolynomial() const { return den_.degree() == 0; }

  RationalFn& operator+=(const RationalFn& o);
  RationalFn& operator-=(const RationalFn& o);
  RationalFn& operator*=(const RationalFn& o);
  RationalFn& operator/=(const RationalFn& o);
  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
  RationalFn operator-() const;

  friend bool operator==(const RationalFn& a, const RationalFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

  // Throws std::domain_error at a pole.
  Gaussian operator()(const Gaussian& at) const;

  RationalFn derivative() const;
  RationalFn shifted(const Gaussian& delta) const;
  RationalFn conj() const;
  RationalFn pow(int e) const;

  std::string str() const;

 private:
  Poly num_;
  Poly den_;
};

RationalFn rationalReduce(const Poly& num, const Poly& den);

}  // namespace casorati
