#pragma once

#include "casorati/bigfloat.hpp"
#include "casorati/rational_fn.hpp"

#include <string>

namespace casorati {

// p(x) * exp(a x^2/2 + b x)
class ExpPoly {
 public:
  Poly p;
  Rational a;
  Rational b;

  ExpPoly() = default;
  ExpPoly(const Poly& poly) : p(poly) {}  // NOLINT(google-explicit-constructor)
  ExpPoly(const Poly& poly, const Rational& a_, const Rational& b_) : p(poly), a(a_), b(b_) {}

  bool isZero() const { return p.isZero(); }
  bool samePair(const ExpPoly& o) const { return a == o.a && b == o.b; }
  // a x + b, the derivative of the exponent
  Poly exponentSlope() const;

  ExpPoly derivative() const;
  ExpPoly pow(int e) const;

  friend ExpPoly operator*(const ExpPoly& f, const ExpPoly& g) { return ExpPoly(f.p * g.p, f.a + g.a, f.b + g.b); }
  friend ExpPoly operator*(const Gaussian& c, const ExpPoly& f) { return ExpPoly(c * f.p, f.a, f.b); }
  // Sum of two terms sharing one exponent pair; throws otherwise.
  friend ExpPoly operator+(const ExpPoly& f, const ExpPoly& g);
  friend ExpPoly operator-(const ExpPoly& f, const ExpPoly& g);

  friend bool operator==(const ExpPoly& f, const ExpPoly& g) {
    if (f.p.isZero() && g.p.isZero()) return true;
    return f.p == g.p && f.samePair(g);
  }
  friend bool operator!=(const ExpPoly& f, const ExpPoly& g) { return !(f == g); }

  // Real part of the value at a real rational point.
  BigFloat evaluate(const Rational& at, long precisionBits) const;

  std::string str() const;
};

ExpPoly expPolyDerivative(const ExpPoly& f);

// r(x) * exp(a x^2/2 + b x) with r reduced.
class ExpPolyRatio {
 public:
  RationalFn r;
  Rational a;
  Rational b;

  ExpPolyRatio() = default;
  ExpPolyRatio(const ExpPoly& f) : r(f.p), a(f.a), b(f.b) {}  // NOLINT(google-explicit-constructor)
  ExpPolyRatio(const RationalFn& rf, const Rational& a_, const Rational& b_) : r(rf), a(a_), b(b_) {}
  // num/den; throws on a zero denominator
  ExpPolyRatio(const ExpPoly& num, const ExpPoly& den);

  ExpPoly num() const { return ExpPoly(r.num(), a, b); }
  ExpPoly den() const { return ExpPoly(r.den()); }
  bool isZero() const { return r.isZero(); }

  ExpPolyRatio derivative() const;
  ExpPolyRatio pow(int e) const;

  friend ExpPolyRatio operator*(const ExpPolyRatio& f, const ExpPolyRatio& g) {
    return ExpPolyRatio(f.r * g.r, f.a + g.a, f.b + g.b);
  }
  friend ExpPolyRatio operator/(const ExpPolyRatio& f, const ExpPolyRatio& g) {
    return ExpPolyRatio(f.r / g.r, f.a - g.a, f.b - g.b);
  }
  friend ExpPolyRatio operator+(const ExpPolyRatio& f, const ExpPolyRatio& g);
  friend ExpPolyRatio operator-(const ExpPolyRatio& f, const ExpPolyRatio& g);

  friend bool operator==(const ExpPolyRatio& f, const ExpPolyRatio& g) {
    if (f.r.isZero() && g.r.isZero()) return true;
    return f.r == g.r && f.a == g.a && f.b == g.b;
  }
  friend bool operator!=(const ExpPolyRatio& f, const ExpPolyRatio& g) { return !(f == g); }

  std::string str() const;
};

}  // namespace casorati
