#include "casorati/factored.hpp"

#include <algorithm>
#include <stdexcept>

namespace casorati {

void FactoredProduct::add(const Poly& key, const Rational& e) {
  if (sgn(e) == 0 || (key.isConstant() && key.coeff(0).isOne())) return;
  auto it = factors_.find(key);
  if (it == factors_.end()) {
    factors_.emplace(key, e);
    return;
  }
  it->second += e;
  if (sgn(it->second) == 0) factors_.erase(it);
}

FactoredProduct FactoredProduct::of(const Poly& p, const Rational& e) {
  if (p.isZero()) throw std::domain_error("zero factor in a factored product");
  FactoredProduct out;
  out.add(p, e);
  return out;
}

FactoredProduct FactoredProduct::of(const RationalFn& f, const Rational& e) {
  FactoredProduct out = of(f.num(), e);
  out.add(f.den(), -e);
  return out;
}

FactoredProduct& FactoredProduct::operator*=(const FactoredProduct& o) {
  for (const auto& [k, e] : o.factors_) add(k, e);
  return *this;
}

FactoredProduct& FactoredProduct::operator/=(const FactoredProduct& o) {
  for (const auto& [k, e] : o.factors_) add(k, -e);
  return *this;
}

FactoredProduct FactoredProduct::pow(const Rational& e) const {
  FactoredProduct out;
  for (const auto& [k, x] : factors_) out.add(k, x * e);
  return out;
}

FactoredProduct FactoredProduct::shifted(const Gaussian& delta) const {
  FactoredProduct out;
  for (const auto& [k, e] : factors_) out.add(k.shifted(delta), e);
  return out;
}

FactoredProduct FactoredProduct::star() const {
  FactoredProduct out;
  for (const auto& [k, e] : factors_) out.add(k.conj(), e);
  return out;
}

bool FactoredProduct::hasIntegerExponents() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const auto& kv) { return kv.second.get_den() == 1; });
}

BigInt FactoredProduct::exponentLcm() const {
  BigInt l = 1;
  for (const auto& [k, e] : factors_) l = lcm(l, BigInt(e.get_den()));
  return l;
}

RationalFn FactoredProduct::toRationalFn() const {
  Poly num(1), den(1);
  for (const auto& [k, e] : factors_) {
    if (e.get_den() != 1) throw std::domain_error("fractional exponent left in product");
    const long p = e.get_num().get_si();
    if (p > 0) num *= k.pow(static_cast<int>(p));
    else den *= k.pow(static_cast<int>(-p));
  }
  return RationalFn(num, den);
}

std::string FactoredProduct::str() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [k, e] : factors_) {
    if (!s.empty()) s += " * ";
    s += "(" + k.str() + ")^(" + toString(e) + ")";
  }
  return s;
}

bool equalUpToRootOfUnity(const FactoredProduct& a, const FactoredProduct& b, BigInt* usedPower) {
  const FactoredProduct ratio = a / b;
  const BigInt L = ratio.exponentLcm();
  if (usedPower) *usedPower = L;
  if (ratio.isOne()) return true;
  struct Term {
    const Poly* key;
    long power;
  };
  std::vector<Term> pos, neg;
  long degPos = 0, degNeg = 0;
  for (const auto& [k, e] : ratio.factors()) {
    Rational scaled = e * Rational(L);
    const long p = scaled.get_num().get_si();
    if (p > 0) {
      pos.push_back({&k, p});
      degPos += p * k.degree();
    } else {
      neg.push_back({&k, -p});
      degNeg += -p * k.degree();
    }
  }
  const long d = std::max(degPos, degNeg);
  for (long x = 0; x <= d; ++x) {
    Gaussian l(1), r(1);
    for (const auto& t : pos) l *= power((*t.key)(Gaussian(x)), t.power);
    for (const auto& t : neg) r *= power((*t.key)(Gaussian(x)), t.power);
    if (l != r) return false;
  }
  return true;
}

}  // namespace casorati
