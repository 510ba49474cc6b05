#pragma once

#include "casorati/rational_fn.hpp"

#include <map>
#include <string>
#include <vector>

namespace casorati {

// prod_k K_k(x)^{e_k} with polynomial keys and rational exponents. Fractional
// powers are kept symbolic; shifting and starring act on the keys.
class FactoredProduct {
 public:
  using FactorMap = std::map<Poly, Rational, PolyLess>;

  FactoredProduct() = default;
  // Throws std::domain_error for the zero polynomial.
  static FactoredProduct of(const Poly& p, const Rational& e = Rational(1));
  static FactoredProduct of(const RationalFn& f, const Rational& e = Rational(1));

  FactoredProduct& operator*=(const FactoredProduct& o);
  FactoredProduct& operator/=(const FactoredProduct& o);
  friend FactoredProduct operator*(FactoredProduct a, const FactoredProduct& b) { return a *= b; }
  friend FactoredProduct operator/(FactoredProduct a, const FactoredProduct& b) { return a /= b; }

  FactoredProduct pow(const Rational& e) const;
  FactoredProduct shifted(const Gaussian& delta) const;
  FactoredProduct shiftedImag(const Rational& t) const { return shifted(Gaussian(Rational(0), t)); }
  // coefficientwise conjugation of every key
  FactoredProduct star() const;

  const FactorMap& factors() const { return factors_; }
  bool isOne() const { return factors_.empty(); }
  bool hasIntegerExponents() const;
  // lcm of the exponent denominators
  BigInt exponentLcm() const;
  // Multiplies the product out; throws std::domain_error on a fractional exponent.
  RationalFn toRationalFn() const;

  std::string str() const;

 private:
  void add(const Poly& key, const Rational& e);
  FactorMap factors_;
};

// True iff a^L = b^L as rational functions, L the lcm of the exponent
// denominators of a/b. Decided by exact evaluation at deg+1 integer points.
bool equalUpToRootOfUnity(const FactoredProduct& a, const FactoredProduct& b, BigInt* usedPower = nullptr);

}  // namespace casorati
