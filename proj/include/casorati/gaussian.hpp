#pragma once

#include "casorati/rational.hpp"

#include <compare>
#include <string>

namespace casorati {

// a + b i with rational a, b.
class Gaussian {
 public:
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(long r) : re(r) {}  // NOLINT(google-explicit-constructor)
  Gaussian(const Rational& r) : re(r) {}  // NOLINT(google-explicit-constructor)
  Gaussian(const Rational& r, const Rational& i) : re(r), im(i) {}

  static Gaussian imagUnit() { return Gaussian(Rational(0), Rational(1)); }

  bool isZero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool isReal() const { return sgn(im) == 0; }
  bool isOne() const { return re == 1 && sgn(im) == 0; }

  Gaussian conj() const { return Gaussian(re, -im); }
  Rational norm() const { return re * re + im * im; }
  // max(|re|, |im|)
  Rational maxAbs() const;
  std::size_t bitSize() const;

  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  Gaussian operator-() const { return Gaussian(-re, -im); }

  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

  // Total order (real part first), only for use as a map key.
  friend int compare(const Gaussian& a, const Gaussian& b);

  Gaussian pow(long e) const;

  // "3/4", "-1/2i", "(1+3/4i)"
  std::string str() const;
  static Gaussian parse(const std::string& text);
};

Gaussian power(const Gaussian& base, long e);

}  // namespace casorati
