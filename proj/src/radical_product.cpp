#include "casorati/radical_product.hpp"

#include <stdexcept>

namespace casorati {

std::string GridFactor::str() const {
  std::string name;
  switch (kind) {
    case Kind::B: name = "B"; break;
    case Kind::D: name = "D"; break;
    case Kind::Cas: name = "W" + std::to_string(level); break;
    case Kind::CasN: name = "W" + std::to_string(level) + "n"; break;
  }
  return name + "(x" + (shift ? (shift > 0 ? "+" : "") + std::to_string(shift) : "") + ")";
}

void RadicalProduct::add(const GridFactor& f, const Entry& e) {
  // the empty Casoratian is 1
  if (f.kind == GridFactor::Kind::Cas && f.level == 0) return;
  auto it = factors_.find(f);
  if (it == factors_.end()) {
    if (sgn(e.exponent) != 0) factors_.emplace(f, e);
    return;
  }
  it->second.exponent += e.exponent;
  it->second.radical = it->second.radical || e.radical;
  if (sgn(it->second.exponent) == 0) factors_.erase(it);
}

RadicalProduct RadicalProduct::of(const GridFactor& f, const Rational& e) {
  RadicalProduct r;
  r.add(f, Entry{e, e.get_den() != 1});
  return r;
}

RadicalProduct& RadicalProduct::operator*=(const RadicalProduct& o) {
  sign *= o.sign;
  for (const auto& [f, e] : o.factors_) add(f, e);
  return *this;
}

RadicalProduct& RadicalProduct::operator/=(const RadicalProduct& o) {
  sign *= o.sign;
  for (const auto& [f, e] : o.factors_) add(f, Entry{-e.exponent, e.radical});
  return *this;
}

RadicalProduct RadicalProduct::operator-() const {
  RadicalProduct r = *this;
  r.sign = -r.sign;
  return r;
}

RadicalProduct RadicalProduct::sqrt() const {
  RadicalProduct r;
  r.sign = sign;
  if (sign < 0) throw std::domain_error("square root of a negative constant");
  for (const auto& [f, e] : factors_) r.factors_.emplace(f, Entry{e.exponent / 2, true});
  return r;
}

RadicalProduct RadicalProduct::shifted(long k) const {
  RadicalProduct r;
  r.sign = sign;
  for (const auto& [f, e] : factors_) r.add(f.shifted(k), e);
  return r;
}

bool RadicalProduct::integral() const {
  for (const auto& [f, e] : factors_)
    if (e.exponent.get_den() != 1) return false;
  return true;
}

BigFloat RadicalProduct::evaluate(long x, const Evaluator& value, long precisionBits) const {
  BigFloat out(1, precisionBits);
  for (const auto& [f, e] : factors_) {
    if (e.exponent.get_den() != 1) throw std::domain_error("fractional power of " + f.str() + " left unevaluated");
    const long k = e.exponent.get_num().get_si();
    BigFloat v = value(f, x);
    if (e.radical) {
      const int s0 = value(f, 0).sign();
      if (s0 == 0) throw std::domain_error("square-root rule needs " + f.str() + " nonzero at x=0");
      if (s0 < 0 && k % 2 != 0) v = -v;
    }
    out *= v.pow(k);
  }
  return sign < 0 ? -out : out;
}

std::string RadicalProduct::str() const {
  std::string s = sign < 0 ? "-" : "";
  if (factors_.empty()) return s + "1";
  bool first = true;
  for (const auto& [f, e] : factors_) {
    if (!first) s += " ";
    first = false;
    s += f.str();
    if (e.exponent != 1) s += "^(" + toString(e.exponent) + ")";
  }
  return s;
}

}  // namespace casorati
