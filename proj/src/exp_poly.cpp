#include "casorati/exp_poly.hpp"

#include <stdexcept>

namespace casorati {

namespace {
std::string exponentStr(const Rational& a, const Rational& b) {
  if (sgn(a) == 0 && sgn(b) == 0) return "";
  return " * exp(" + toString(a) + "*x^2/2 + " + toString(b) + "*x)";
}
}  // namespace

Poly ExpPoly::exponentSlope() const { return Poly(std::vector<Gaussian>{Gaussian(b), Gaussian(a)}); }

ExpPoly ExpPoly::derivative() const {
  if (sgn(a) == 0 && sgn(b) == 0) return ExpPoly(p.derivative(), a, b);
  return ExpPoly(p.derivative() + exponentSlope() * p, a, b);
}

ExpPoly expPolyDerivative(const ExpPoly& f) { return f.derivative(); }

ExpPoly ExpPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative ExpPoly power");
  return ExpPoly(p.pow(e), a * e, b * e);
}

ExpPoly operator+(const ExpPoly& f, const ExpPoly& g) {
  if (f.isZero()) return g;
  if (g.isZero()) return f;
  if (!f.samePair(g)) throw std::domain_error("adding ExpPoly terms with different exponents");
  return ExpPoly(f.p + g.p, f.a, f.b);
}

ExpPoly operator-(const ExpPoly& f, const ExpPoly& g) { return f + ExpPoly(-g.p, g.a, g.b); }

BigFloat ExpPoly::evaluate(const Rational& at, long precisionBits) const {
  Gaussian v = p(Gaussian(at));
  Rational e = a * at * at / 2 + b * at;
  return BigFloat(v.re, precisionBits) * BigFloat(e, precisionBits).exp();
}

std::string ExpPoly::str() const {
  if (p.isZero()) return "0";
  return "(" + p.str() + ")" + exponentStr(a, b);
}

ExpPolyRatio::ExpPolyRatio(const ExpPoly& num, const ExpPoly& den)
    : r(num.p, den.p), a(num.a - den.a), b(num.b - den.b) {}

ExpPolyRatio ExpPolyRatio::derivative() const {
  RationalFn d = r.derivative();
  if (sgn(a) != 0 || sgn(b) != 0) d += RationalFn(Poly(std::vector<Gaussian>{Gaussian(b), Gaussian(a)})) * r;
  return ExpPolyRatio(d, a, b);
}

ExpPolyRatio ExpPolyRatio::pow(int e) const { return ExpPolyRatio(r.pow(e), a * e, b * e); }

ExpPolyRatio operator+(const ExpPolyRatio& f, const ExpPolyRatio& g) {
  if (f.isZero()) return g;
  if (g.isZero()) return f;
  if (f.a != g.a || f.b != g.b) throw std::domain_error("adding ExpPolyRatio terms with different exponents");
  return ExpPolyRatio(f.r + g.r, f.a, f.b);
}

ExpPolyRatio operator-(const ExpPolyRatio& f, const ExpPolyRatio& g) {
  return f + ExpPolyRatio(-g.r, g.a, g.b);
}

std::string ExpPolyRatio::str() const {
  if (r.isZero()) return "0";
  return "(" + r.str() + ")" + exponentStr(a, b);
}

}  // namespace casorati
