#include "casorati/gaussian.hpp"

#include <stdexcept>

namespace casorati {

Rational Gaussian::maxAbs() const {
  Rational a = absValue(re), b = absValue(im);
  return a < b ? b : a;
}

std::size_t Gaussian::bitSize() const {
  std::size_t a = casorati::bitSize(re), b = casorati::bitSize(im);
  return a < b ? b : a;
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re += o.re;
  if (sgn(o.im) != 0) im += o.im;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re -= o.re;
  if (sgn(o.im) != 0) im -= o.im;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  if (sgn(im) == 0 && sgn(o.im) == 0) {
    re *= o.re;
    return *this;
  }
  if (sgn(o.im) == 0) {
    re *= o.re;
    im *= o.re;
    return *this;
  }
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re.swap(r);
  im.swap(i);
  return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
  if (o.isZero()) throw std::domain_error("division by zero Gaussian rational");
  if (sgn(o.im) == 0) {
    re /= o.re;
    if (sgn(im) != 0) im /= o.re;
    return *this;
  }
  Rational n = o.norm();
  Gaussian c = o.conj();
  *this *= c;
  re /= n;
  im /= n;
  return *this;
}

int compare(const Gaussian& a, const Gaussian& b) {
  int c = cmp(a.re, b.re);
  if (c != 0) return c < 0 ? -1 : 1;
  c = cmp(a.im, b.im);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

Gaussian Gaussian::pow(long e) const { return power(*this, e); }

Gaussian power(const Gaussian& base, long e) {
  if (e < 0) return power(Gaussian(1) / base, -e);
  Gaussian result(1), b(base);
  while (e) {
    if (e & 1L) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

std::string Gaussian::str() const {
  if (sgn(im) == 0) return toString(re);
  std::string imPart = (im == 1) ? "i" : (im == -1 ? "-i" : toString(im) + "i");
  if (sgn(re) == 0) return imPart;
  std::string s = "(" + toString(re);
  if (sgn(im) > 0) s += "+";
  return s + imPart + ")";
}

Gaussian Gaussian::parse(const std::string& raw) {
  std::string t;
  for (char c : raw)
    if (c != ' ') t += c;
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  if (t.empty()) throw std::invalid_argument("empty Gaussian rational");
  if (t.back() != 'i') return Gaussian(parseRational(t));
  std::string body = t.substr(0, t.size() - 1);
  // split at the last sign that is not the leading one
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imagOf = [](const std::string& s) -> Rational {
    if (s.empty() || s == "+") return Rational(1);
    if (s == "-") return Rational(-1);
    return parseRational(s);
  };
  if (split == std::string::npos) return Gaussian(Rational(0), imagOf(body));
  return Gaussian(parseRational(body.substr(0, split)), imagOf(body.substr(split)));
}

}  // namespace casorati
