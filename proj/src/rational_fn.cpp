#include "casorati/rational_fn.hpp"

#include <stdexcept>

namespace casorati {

RationalFn::RationalFn(const Poly& num, const Poly& den) {
  if (den.isZero()) throw std::domain_error("rational function with zero denominator");
  if (num.isZero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num_ = Poly::exactDiv(num, g);
    den_ = Poly::exactDiv(den, g);
  } else {
    num_ = num;
    den_ = den;
  }
  Gaussian inv = Gaussian(1) / den_.lead();
  num_ *= inv;
  den_ *= inv;
}

RationalFn rationalReduce(const Poly& num, const Poly& den) { return RationalFn(num, den); }

RationalFn& RationalFn::operator+=(const RationalFn& o) {
  if (den_ == o.den_)
    *this = RationalFn(num_ + o.num_, den_);
  else
    *this = RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) {
  if (den_ == o.den_)
    *this = RationalFn(num_ - o.num_, den_);
  else
    *this = RationalFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

RationalFn& RationalFn::operator*=(const RationalFn& o) {
  *this = RationalFn(num_ * o.num_, den_ * o.den_);
  return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& o) {
  if (o.isZero()) throw std::domain_error("rational function division by zero");
  *this = RationalFn(num_ * o.den_, den_ * o.num_);
  return *this;
}

RationalFn RationalFn::operator-() const {
  RationalFn r(*this);
  r.num_ = -r.num_;
  return r;
}

Gaussian RationalFn::operator()(const Gaussian& at) const {
  Gaussian d = den_(at);
  if (d.isZero()) throw std::domain_error("rational function evaluated at a pole");
  return num_(at) / d;
}

RationalFn RationalFn::derivative() const {
  return RationalFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFn RationalFn::shifted(const Gaussian& delta) const {
  RationalFn r;
  r.num_ = num_.shifted(delta);
  r.den_ = den_.shifted(delta);  // shifting keeps coprimality and monicity
  return r;
}

RationalFn RationalFn::conj() const {
  RationalFn r;
  r.num_ = num_.conj();
  r.den_ = den_.conj();
  return r;
}

RationalFn RationalFn::pow(int e) const {
  if (e >= 0) {
    RationalFn r;
    r.num_ = num_.pow(e);
    r.den_ = den_.pow(e);
    return r;
  }
  if (isZero()) throw std::domain_error("zero rational function to a negative power");
  return RationalFn(den_.pow(-e), num_.pow(-e));
}

std::string RationalFn::str() const {
  if (den_.degree() == 0) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace casorati
