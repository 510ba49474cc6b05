#pragma once

#include "casorati/bigfloat.hpp"
#include "casorati/rational.hpp"

#include <compare>
#include <functional>
#include <map>
#include <string>

namespace casorati {

// A named grid quantity f(x) = Q(x + shift). Cas refers to the Casoratian of
// the first `level` seeds, CasN to the same with the eigenstate appended.
struct GridFactor {
  enum class Kind { B, D, Cas, CasN };
  Kind kind = Kind::B;
  long level = 0;
  long shift = 0;

  GridFactor shifted(long k) const { return GridFactor{kind, level, shift + k}; }
  std::string str() const;
  auto operator<=>(const GridFactor&) const = default;
};

// sign * prod f^e with symbolic square roots. sqrt(a) sqrt(b) = sqrt(ab) is
// applied on every multiplication; a factor that has been under a root and
// ends at an integer power k is evaluated as (sgn f(0) f(x))^k.
class RadicalProduct {
 public:
  struct Entry {
    Rational exponent;
    bool radical = false;
  };
  using Evaluator = std::function<BigFloat(const GridFactor&, long x)>;

  int sign = 1;

  static RadicalProduct of(const GridFactor& f, const Rational& e = Rational(1));

  RadicalProduct& operator*=(const RadicalProduct& o);
  RadicalProduct& operator/=(const RadicalProduct& o);
  friend RadicalProduct operator*(RadicalProduct a, const RadicalProduct& b) { return a *= b; }
  friend RadicalProduct operator/(RadicalProduct a, const RadicalProduct& b) { return a /= b; }
  RadicalProduct operator-() const;

  // Halves every exponent and marks every factor as having been under a root.
  RadicalProduct sqrt() const;
  RadicalProduct shifted(long k) const;

  const std::map<GridFactor, Entry>& factors() const { return factors_; }
  bool integral() const;

  // Throws std::domain_error while a fractional power is left, or when the
  // square-root rule meets f(0) = 0.
  BigFloat evaluate(long x, const Evaluator& value, long precisionBits) const;

  std::string str() const;

 private:
  void add(const GridFactor& f, const Entry& e);
  std::map<GridFactor, Entry> factors_;
};

}  // namespace casorati
