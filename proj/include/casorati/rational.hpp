#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace casorati {

using BigInt = mpz_class;
using Rational = mpq_class;

// Builds a canonical num/den rational.
Rational makeRational(long num, long den = 1);

// Accepts "p/q", integers and plain decimals such as "-0.6" or "2.5e-1".
// Throws std::invalid_argument on anything else.
Rational parseRational(const std::string& text);

std::string toString(const Rational& q);

// Bits of numerator plus bits of denominator.
std::size_t bitSize(const Rational& q);

Rational absValue(const Rational& q);

// Integer power, negative exponents allowed for nonzero base.
Rational power(const Rational& base, long exponent);

}  // namespace casorati
