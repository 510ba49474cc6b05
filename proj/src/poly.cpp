#include "casorati/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace casorati {

Poly::Poly(const Gaussian& c) {
  if (!c.isZero()) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Gaussian> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::x() { return monomial(Gaussian(1), 1); }

Poly Poly::monomial(const Gaussian& c, int k) {
  if (k < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<Gaussian> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::fromRationals(const std::vector<Rational>& coeffs) {
  std::vector<Gaussian> v;
  v.reserve(coeffs.size());
  for (const auto& q : coeffs) v.emplace_back(q);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().isZero()) coeffs_.pop_back();
}

bool Poly::isReal() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Gaussian& c) { return c.isReal(); });
}

Gaussian Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return Gaussian();
  return coeffs_[static_cast<std::size_t>(k)];
}

const Gaussian& Poly::lead() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.isZero() || b.isZero()) return Poly();
  std::vector<Gaussian> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  Gaussian t;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].isZero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].isZero()) continue;
      t = a.coeffs_[i];
      t *= b.coeffs_[j];
      out[i + j] += t;
    }
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Gaussian& c) {
  if (c.isZero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& k : coeffs_) k *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& k : r.coeffs_) k = -k;
  return r;
}

Gaussian Poly::operator()(const Gaussian& at) const {
  Gaussian acc;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc *= at;
    acc += coeffs_[k];
  }
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Gaussian> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * Gaussian(static_cast<long>(k));
  return Poly(std::move(v));
}

Poly Poly::shifted(const Gaussian& delta) const {
  if (delta.isZero() || coeffs_.size() <= 1) return *this;
  // Taylor shift by repeated synthetic division.
  std::vector<Gaussian> a = coeffs_;
  const std::size_t n = a.size();
  Gaussian t;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) {
      t = a[j + 1];
      t *= delta;
      a[j] += t;
    }
  }
  return Poly(std::move(a));
}

Poly Poly::conj() const {
  Poly r(*this);
  for (auto& k : r.coeffs_) k = k.conj();
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  Poly result(1), b(*this);
  while (e) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

Poly Poly::monic() const {
  if (isZero()) return *this;
  Gaussian inv = Gaussian(1) / lead();
  return *this * inv;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.isZero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Gaussian> rem = a.coeffs_;
  const int db = b.degree();
  std::vector<Gaussian> quo(static_cast<std::size_t>(a.degree() - db + 1));
  const Gaussian invLead = Gaussian(1) / b.lead();
  Gaussian t;
  for (int k = a.degree() - db; k >= 0; --k) {
    Gaussian q = rem[static_cast<std::size_t>(k + db)] * invLead;
    if (q.isZero()) continue;
    for (int j = 0; j <= db; ++j) {
      t = b.coeffs_[static_cast<std::size_t>(j)];
      t *= q;
      rem[static_cast<std::size_t>(k + j)] -= t;
    }
    quo[static_cast<std::size_t>(k)] = std::move(q);
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::exactDiv(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.isZero()) throw std::domain_error("inexact polynomial division");
  return q;
}

std::size_t Poly::bitSize() const {
  std::size_t m = 0;
  for (const auto& c : coeffs_) m = std::max(m, c.bitSize());
  return m;
}

std::string Poly::str() const {
  if (isZero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const Gaussian& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.isZero()) continue;
    if (!s.empty()) s += " + ";
    std::string mono = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    if (k == 0)
      s += c.str();
    else if (c.isOne())
      s += mono;
    else
      s += c.str() + "*" + mono;
  }
  return s;
}

int compare(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int k = a.degree(); k >= 0; --k) {
    int c = compare(a.coeffs_[static_cast<std::size_t>(k)], b.coeffs_[static_cast<std::size_t>(k)]);
    if (c != 0) return c;
  }
  return 0;
}

Poly gcd(Poly a, Poly b) {
  while (!b.isZero()) {
    Poly r = Poly::divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Poly polyShift(const Poly& p, const Gaussian& delta) { return p.shifted(delta); }
Poly polyDerivative(const Poly& p) { return p.derivative(); }

}  // namespace casorati
