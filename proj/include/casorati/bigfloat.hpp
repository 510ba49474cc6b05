#pragma once

#include "casorati/rational.hpp"

#include <mpfr.h>

#include <string>

namespace casorati {

constexpr long kDefaultPrecisionBits = 256;

// Reads CASORATI_PRECISION_BITS, falling back to kDefaultPrecisionBits.
long precisionFromEnvironment();

// MPFR value with its own precision. Binary operations round to the larger
// operand precision, always to nearest.
class BigFloat {
 public:
  explicit BigFloat(long precisionBits = kDefaultPrecisionBits);
  BigFloat(const Rational& q, long precisionBits);
  BigFloat(long value, long precisionBits);
  static BigFloat fromString(const std::string& decimal, long precisionBits);

  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  BigFloat operator-() const;

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  int sign() const { return mpfr_sgn(v_); }
  bool isZero() const { return mpfr_zero_p(v_) != 0; }
  bool isFinite() const { return mpfr_number_p(v_) != 0; }

  BigFloat abs() const;
  // Real square root; throws std::domain_error on a negative argument.
  BigFloat sqrt() const;
  BigFloat root(unsigned long k) const;
  BigFloat pow(long e) const;
  BigFloat exp() const;
  BigFloat log10abs() const;

  double toDouble() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Scientific notation with the given number of significant digits.
  std::string str(int digits = 40) const;

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  mpfr_t v_;
};

BigFloat maxOf(const BigFloat& a, const BigFloat& b);

}  // namespace casorati
