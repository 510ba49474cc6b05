#include "casorati/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace casorati {

Rational makeRational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

static bool allDigits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

static BigInt parseInteger(const std::string& s) {
  std::string body = s;
  bool neg = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    neg = body[0] == '-';
    body = body.substr(1);
  }
  if (!allDigits(body)) throw std::invalid_argument("not an integer: '" + s + "'");
  BigInt z(body, 10);
  return neg ? BigInt(-z) : z;
}

Rational parseRational(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  if (text.empty()) throw std::invalid_argument("empty rational");

  auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num = parseInteger(text.substr(0, slash));
    BigInt den = parseInteger(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + raw + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  // decimal with optional exponent
  long exp10 = 0;
  auto epos = text.find_first_of("eE");
  std::string mant = text;
  if (epos != std::string::npos) {
    exp10 = parseInteger(text.substr(epos + 1)).get_si();
    mant = text.substr(0, epos);
  }
  bool neg = false;
  if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
    neg = mant[0] == '-';
    mant = mant.substr(1);
  }
  std::string digits = mant;
  auto dot = mant.find('.');
  if (dot != std::string::npos) {
    digits = mant.substr(0, dot) + mant.substr(dot + 1);
    exp10 -= static_cast<long>(mant.size() - dot - 1);
  }
  if (!allDigits(digits)) throw std::invalid_argument("not a rational: '" + raw + "'");
  Rational q{BigInt(digits, 10)};
  BigInt ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  if (exp10 >= 0)
    q *= Rational(ten_pow);
  else
    q /= Rational(ten_pow);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::string toString(const Rational& q) { return q.get_str(10); }

std::size_t bitSize(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

Rational absValue(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

Rational power(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    return power(Rational(1) / base, -exponent);
  }
  Rational result(1), b(base);
  unsigned long e = static_cast<unsigned long>(exponent);
  while (e) {
    if (e & 1UL) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

}  // namespace casorati
