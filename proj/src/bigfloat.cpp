#include "casorati/bigfloat.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace casorati {

long precisionFromEnvironment() {
  const char* env = std::getenv("CASORATI_PRECISION_BITS");
  if (!env || !*env) return kDefaultPrecisionBits;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 64)
    throw std::invalid_argument("CASORATI_PRECISION_BITS must be an integer >= 64");
  return v;
}

static mpfr_prec_t checkedPrecision(long bits) {
  if (bits < MPFR_PREC_MIN || bits > 1L << 20) throw std::invalid_argument("unsupported precision");
  return static_cast<mpfr_prec_t>(bits);
}

BigFloat::BigFloat(long precisionBits) {
  mpfr_init2(v_, checkedPrecision(precisionBits));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const Rational& q, long precisionBits) {
  mpfr_init2(v_, checkedPrecision(precisionBits));
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(long value, long precisionBits) {
  mpfr_init2(v_, checkedPrecision(precisionBits));
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat BigFloat::fromString(const std::string& decimal, long precisionBits) {
  BigFloat r(precisionBits);
  if (mpfr_set_str(r.v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("not a decimal number: '" + decimal + "'");
  return r;
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

namespace {
// Widen the destination if the other operand carries more bits.
void widen(mpfr_ptr dst, mpfr_srcptr other) {
  if (mpfr_get_prec(other) > mpfr_get_prec(dst)) mpfr_prec_round(dst, mpfr_get_prec(other), MPFR_RNDN);
}
}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  widen(v_, o.v_);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& o) {
  widen(v_, o.v_);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& o) {
  widen(v_, o.v_);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& o) {
  if (o.isZero()) throw std::domain_error("BigFloat division by zero");
  widen(v_, o.v_);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(*this);
  mpfr_abs(r.v_, r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  if (sign() < 0) throw std::domain_error("square root of a negative value");
  BigFloat r(*this);
  mpfr_sqrt(r.v_, r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::root(unsigned long k) const {
  if (sign() < 0 && k % 2 == 0) throw std::domain_error("even root of a negative value");
  BigFloat r(*this);
  mpfr_rootn_ui(r.v_, r.v_, k, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow(long e) const {
  BigFloat r(*this);
  mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::exp() const {
  BigFloat r(*this);
  mpfr_exp(r.v_, r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::log10abs() const {
  BigFloat r = abs();
  mpfr_log10(r.v_, r.v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::str(int digits) const {
  if (isZero()) return "0";
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

BigFloat maxOf(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

}  // namespace casorati
