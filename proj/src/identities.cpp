#include "casorati/identities.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>

namespace casorati {

std::string verdictName(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
    default: return "error";
  }
}

Json toJson(const Faults& f) {
  Json j = Json::object();
  if (f.entry) j["entry"] = toJson(*f.entry);
  if (f.flipEpsilon) j["flipEpsilon"] = true;
  if (f.eq3Shift != 1) j["eq3Shift"] = f.eq3Shift;
  return j;
}

Faults faultsFromJson(const Json& j) {
  Faults f;
  if (j.is_null()) return f;
  if (j.contains("entry")) f.entry = faultFromJson(j.at("entry"));
  f.flipEpsilon = j.value("flipEpsilon", false);
  f.eq3Shift = j.value("eq3Shift", 1L);
  return f;
}

Json toJson(const IdentityInstance& inst) {
  Json j{{"id", inst.id},
         {"trial", inst.trial},
         {"fs", toJson(inst.fs)},
         {"us", toJson(inst.us)},
         {"f", toJson(inst.f)},
         {"g", toJson(inst.g)},
         {"h", toJson(inst.h)},
         {"gamma", toString(inst.gamma)},
         {"jMax", inst.jMax},
         {"halvings", inst.halvings},
         {"budgetBits", inst.budgetBits}};
  Json fj = toJson(inst.faults);
  if (!fj.empty()) j["faults"] = fj;
  return j;
}

IdentityInstance instanceFromJson(const Json& j) {
  IdentityInstance inst;
  inst.id = j.at("id").get<std::string>();
  inst.trial = j.value("trial", -1L);
  if (j.contains("fs")) inst.fs = expPolyListFromJson(j.at("fs"));
  if (j.contains("us")) inst.us = expPolyListFromJson(j.at("us"));
  if (j.contains("f")) inst.f = expPolyFromJson(j.at("f"));
  if (j.contains("g")) inst.g = expPolyFromJson(j.at("g"));
  if (j.contains("h")) inst.h = expPolyFromJson(j.at("h"));
  inst.gamma = parseRational(j.value("gamma", std::string("1")));
  inst.jMax = j.value("jMax", 10L);
  inst.halvings = j.value("halvings", 4L);
  inst.budgetBits = j.value("budgetBits", kDefaultBudgetBits);
  if (j.contains("faults")) inst.faults = faultsFromJson(j.at("faults"));
  return inst;
}

const std::vector<std::string>& primaryIdentityIds() {
  static const std::vector<std::string> ids = {
      "W.quotient",  "W.oneReduction",  "W.gauge",  "W.nesting",  "W.theorem",  "W.corollary",
      "Wg.quotient", "Wg.oneReduction", "Wg.gauge", "Wg.nesting", "Wg.theorem", "Wg.corollary",
      "Wc.quotient", "Wc.oneReduction", "Wc.gauge", "Wc.nesting", "Wc.theorem", "Wc.corollary"};
  return ids;
}

const std::vector<std::string>& auxiliaryIdentityIds() {
  static const std::vector<std::string> ids = {"eq.W", "eq.Wg", "eq.Wc", "sumFormula", "classicalLimit"};
  return ids;
}

bool isIdentityId(const std::string& id) {
  const auto& a = primaryIdentityIds();
  const auto& b = auxiliaryIdentityIds();
  return std::find(a.begin(), a.end(), id) != a.end() || std::find(b.begin(), b.end(), id) != b.end();
}

std::vector<Poly> polyParts(const std::vector<ExpPoly>& fs) {
  std::vector<Poly> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(f.p);
  return out;
}

std::vector<ExpPoly> asExpPolys(const std::vector<Poly>& fs) { return std::vector<ExpPoly>(fs.begin(), fs.end()); }

Rational binomialMomentSum(long j, long s) {
  Rational total;
  BigInt binom = 1;
  const Rational centre = Rational(j - 1, 2);
  for (long r = 0; r <= j - 1; ++r) {
    Rational term = power(Rational(r) - centre, s) * Rational(binom);
    if (r % 2) total -= term;
    else total += term;
    binom = binom * (j - 1 - r) / (r + 1);
  }
  total.canonicalize();
  return total;
}

namespace {

using Impl = std::function<void(const IdentityInstance&, CheckReport&)>;

const EntryFault* entryOf(const Faults& f) { return f.entry ? &*f.entry : nullptr; }

void guard(const Poly& p, std::size_t budget) {
  const std::size_t bits = p.bitSize();
  if (bits > budget)
    throw BudgetExceeded("coefficient size " + std::to_string(bits) + " bits exceeds budget of " +
                         std::to_string(budget) + " bits");
}
void guard(const ExpPoly& e, std::size_t budget) { guard(e.p, budget); }
void guard(const ExpPolyRatio& e, std::size_t budget) {
  guard(e.r.num(), budget);
  guard(e.r.den(), budget);
}

template <class T>
void settle(const IdentityInstance& in, CheckReport& r, const T& lhs, const T& rhs, bool extraOk = true,
            const std::string& extraWhy = "") {
  guard(lhs, in.budgetBits);
  guard(rhs, in.budgetBits);
  r.lhs = lhs.str();
  r.rhs = rhs.str();
  const bool equal = lhs == rhs;
  r.verdict = (equal && extraOk) ? Verdict::Pass : Verdict::Fail;
  if (!equal) r.message = "sides differ";
  else if (!extraOk) r.message = extraWhy;
}

Poly iShift(const Poly& p, const Rational& t) { return p.shifted(Gaussian(Rational(0), t)); }
Poly rShift(const Poly& p, long k) { return k == 0 ? p : p.shifted(Gaussian(k)); }

template <class T>
std::vector<T> concat(std::vector<T> a, const std::vector<T>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}
template <class T>
std::vector<T> concat(std::vector<T> a, const T& b) {
  a.push_back(b);
  return a;
}

// prod_{j=from}^{to} g(x_j^{(n)})
Poly imagShiftProduct(const Poly& g, long n, long from, long to, const Rational& gamma) {
  Poly out(1);
  for (long j = from; j <= to; ++j) out *= g.shifted(imaginaryShift(n, j, gamma));
  return out;
}

// prod_{j=from}^{to} g(x+j)
Poly realShiftProduct(const Poly& g, long from, long to) {
  Poly out(1);
  for (long j = from; j <= to; ++j) out *= rShift(g, j);
  return out;
}

// --- Wronskian family -----------------------------------------------------

void wQuotient(const IdentityInstance& in, CheckReport& r) {
  if (in.g.isZero()) throw std::invalid_argument("quotient lemma needs g != 0");
  ExpPolyRatio lhs = ExpPolyRatio(in.f, in.g).derivative() * ExpPolyRatio(in.g).pow(2);
  ExpPolyRatio rhs(wronskian({in.g, in.f}, entryOf(in.faults)));
  settle(in, r, lhs, rhs);
}

void wOneReduction(const IdentityInstance& in, CheckReport& r) {
  ExpPoly lhs = wronskian(concat(std::vector<ExpPoly>{ExpPoly(Poly(1))}, in.fs), entryOf(in.faults));
  std::vector<ExpPoly> d;
  for (const auto& f : in.fs) d.push_back(f.derivative());
  settle(in, r, lhs, wronskian(d));
}

void wGauge(const IdentityInstance& in, CheckReport& r) {
  std::vector<ExpPoly> gf;
  for (const auto& f : in.fs) gf.push_back(in.g * f);
  ExpPoly lhs = wronskian(gf, entryOf(in.faults));
  ExpPoly rhs = in.g.pow(static_cast<int>(in.fs.size())) * wronskian(in.fs);
  settle(in, r, lhs, rhs);
}

void wNesting(const IdentityInstance& in, CheckReport& r) {
  if (in.g.isZero()) throw std::invalid_argument("nesting identity needs g != 0");
  const int n = static_cast<int>(in.fs.size());
  ExpPolyRatio lhs = ExpPolyRatio(wronskian(concat(std::vector<ExpPoly>{in.g}, in.fs), entryOf(in.faults))) *
                     ExpPolyRatio(in.g).pow(n - 1);
  std::vector<ExpPoly> inner;
  for (const auto& f : in.fs) inner.push_back(wronskian({in.g, f}));
  settle(in, r, lhs, ExpPolyRatio(wronskian(inner)));
}

void wTheorem(const IdentityInstance& in, CheckReport& r) {
  if (in.us.empty()) throw std::invalid_argument("theorem needs m >= 1");
  const int m = static_cast<int>(in.us.size());
  ExpPoly lhs = wronskian(in.fs).pow(m - 1) * wronskian(concat(in.fs, in.us), entryOf(in.faults));
  std::vector<ExpPoly> inner;
  for (const auto& u : in.us) inner.push_back(wronskian(concat(in.fs, u)));
  settle(in, r, lhs, wronskian(inner));
}

void wCorollary(const IdentityInstance& in, CheckReport& r) {
  if (in.us.empty()) throw std::invalid_argument("corollary needs m >= 1");
  const ExpPoly F = wronskian(in.fs);
  if (F.isZero()) throw std::invalid_argument("W[f_1..f_l] vanishes identically");
  ExpPolyRatio lhs(wronskian(concat(in.fs, in.us), entryOf(in.faults)), F);
  std::vector<ExpPolyRatio> qs;
  for (const auto& u : in.us) qs.emplace_back(wronskian(concat(in.fs, u)), F);
  ExpPolyRatio rhs = wronskianRatio(qs);

  // two-path ratio with v = last u
  std::string wro = "skipped";
  bool wroOk = true;
  std::vector<ExpPoly> head(in.us.begin(), in.us.end() - 1);
  const ExpPoly den = wronskian(concat(in.fs, head));
  std::vector<ExpPolyRatio> qHead(qs.begin(), qs.end() - 1);
  const ExpPolyRatio qDen = wronskianRatio(qHead);
  if (!den.isZero() && !qDen.isZero()) {
    ExpPolyRatio a(wronskian(concat(in.fs, in.us)), den);
    ExpPolyRatio b = rhs / qDen;
    wroOk = a == b;
    wro = wroOk ? "pass" : "fail";
  }
  r.params["twoPathRatio"] = wro;
  settle(in, r, lhs, rhs, wroOk, "two-path Wronskian ratio differs");
}

// --- imaginary shifts -----------------------------------------------------

void gQuotient(const IdentityInstance& in, CheckReport& r) {
  const Poly& f = in.f.p;
  const Poly& g = in.g.p;
  const Rational half = in.gamma / 2;
  Poly lhs = casoratianImag({g, f}, in.gamma, entryOf(in.faults));
  Poly rhs = Gaussian::imagUnit() * (iShift(f, -half) * iShift(g, half) - iShift(f, half) * iShift(g, -half));
  settle(in, r, lhs, rhs);
}

void gOneReduction(const IdentityInstance& in, CheckReport& r) {
  const auto fs = polyParts(in.fs);
  const Rational half = in.gamma / 2;
  Poly lhs = casoratianImag(concat(std::vector<Poly>{Poly(1)}, fs), in.gamma, entryOf(in.faults));
  std::vector<Poly> d;
  for (const auto& f : fs) d.push_back(iShift(f, -half) - iShift(f, half));
  Poly rhs = imagUnitPower(static_cast<long>(fs.size())) * casoratianImag(d, in.gamma);
  settle(in, r, lhs, rhs);
}

void gGauge(const IdentityInstance& in, CheckReport& r) {
  const auto fs = polyParts(in.fs);
  const long n = static_cast<long>(fs.size());
  std::vector<Poly> gf;
  for (const auto& f : fs) gf.push_back(in.g.p * f);
  Poly lhs = casoratianImag(gf, in.gamma, entryOf(in.faults));
  Poly rhs = imagShiftProduct(in.g.p, n, 1, n, in.gamma) * casoratianImag(fs, in.gamma);
  settle(in, r, lhs, rhs);
}

void gNesting(const IdentityInstance& in, CheckReport& r) {
  const auto fs = polyParts(in.fs);
  const Poly& g = in.g.p;
  if (g.isZero()) throw std::invalid_argument("nesting identity needs g != 0");
  const long n = static_cast<long>(fs.size());
  Poly lhs = casoratianImag(concat(std::vector<Poly>{g}, fs), in.gamma, entryOf(in.faults)) *
             imagShiftProduct(g, n + 1, 1, n, in.gamma);
  std::vector<Poly> inner;
  for (const auto& f : fs) inner.push_back(casoratianImag({g, f}, in.gamma));
  Poly rhs = g.shifted(imaginaryShift(n + 1, 1, in.gamma)) * casoratianImag(inner, in.gamma);
  settle(in, r, lhs, rhs);
}

void gTheorem(const IdentityInstance& in, CheckReport& r) {
  const auto fs = polyParts(in.fs);
  const auto us = polyParts(in.us);
  if (us.empty()) throw std::invalid_argument("theorem needs m >= 1");
  const long m = static_cast<long>(us.size());
  const Poly F = casoratianImag(fs, in.gamma);
  Poly lhs = imagShiftProduct(F, m - 1, 1, m - 1, in.gamma) * casoratianImag(concat(fs, us), in.gamma, entryOf(in.faults));
  std::vector<Poly> inner;
  for (const auto& u : us) inner.push_back(casoratianImag(concat(fs, u), in.gamma));
  settle(in, r, lhs, casoratianImag(inner, in.gamma));
}

void gCorollary(const IdentityInstance& in, CheckReport& r) {
  const auto fs = polyParts(in.fs);
  const auto us = polyParts(in.us);
  if (us.empty()) throw std::invalid_argument("corollary needs m >= 1");
  const long m = static_cast<long>(us.size());
  const Rational half = in.gamma / 2;
  const Poly F = casoratianImag(fs, in.gamma);
  if (F.isZero()) throw std::invalid_argument("W_gamma[f_1..f_l] vanishes identically");
  const Poly A = casoratianImag(concat(fs, us), in.gamma, entryOf(in.faults));
  std::vector<Poly> inner;
  for (const auto& u : us) inner.push_back(casoratianImag(concat(fs, u), in.gamma));
  const Poly B = casoratianImag(inner, in.gamma);
  // w(y)^2 = F(y - i gamma/2) F(y + i gamma/2), taken at y = x_j^{(m)}
  Poly wSquares(1);
  for (long j = 1; j <= m; ++j) {
    const Poly Fj = F.shifted(imaginaryShift(m, j, in.gamma));
    wSquares *= iShift(Fj, -half) * iShift(Fj, half);
  }
  const Rational outer = Rational(m) * in.gamma / 2;
  Poly lhs = A * A * wSquares;
  Poly rhs = B * B * iShift(F, -outer) * iShift(F, outer);
  settle(in, r, lhs, rhs);
}

// --- real shifts ----------------------------------------------------------

void cQuotient(const IdentityInstance& in, CheckReport& r) {
  const Poly& f = in.f.p;
  const Poly& g = in.g.p;
  Poly lhs = casoratianReal({g, f}, entryOf(in.faults));
  Poly rhs = rShift(f, 1) * g - f * rShift(g, 1);
  settle(in, r, lhs, rhs);
}

void cOneReduction(const IdentityInstance& in, CheckReport& r) {
  const auto fs = polyParts(in.fs);
  Poly lhs = casoratianReal(concat(std::vector<Poly>{Poly(1)}, fs), entryOf(in.faults));
  std::vector<Poly> d;
  for (const auto& f : fs) d.push_back(rShift(f, 1) - f);
  settle(in, r, lhs, casoratianReal(d));
}

void cGauge(const IdentityInstance& in, CheckReport& r) {
  const auto fs = polyParts(in.fs);
  const long n = static_cast<long>(fs.size());
  std::vector<Poly> gf;
  for (const auto& f : fs) gf.push_back(in.g.p * f);
  Poly lhs = casoratianReal(gf, entryOf(in.faults));
  Poly rhs = realShiftProduct(in.g.p, 0, n - 1) * casoratianReal(fs);
  settle(in, r, lhs, rhs);
}

void cNesting(const IdentityInstance& in, CheckReport& r) {
  const auto fs = polyParts(in.fs);
  const Poly& g = in.g.p;
  if (g.isZero()) throw std::invalid_argument("nesting identity needs g != 0");
  const long n = static_cast<long>(fs.size());
  Poly lhs = casoratianReal(concat(std::vector<Poly>{g}, fs), entryOf(in.faults)) * realShiftProduct(g, 0, n - 1);
  std::vector<Poly> inner;
  for (const auto& f : fs) inner.push_back(casoratianReal({g, f}));
  settle(in, r, lhs, g * casoratianReal(inner));
}

void cTheorem(const IdentityInstance& in, CheckReport& r) {
  const auto fs = polyParts(in.fs);
  const auto us = polyParts(in.us);
  if (us.empty()) throw std::invalid_argument("theorem needs m >= 1");
  const long m = static_cast<long>(us.size());
  const Poly F = casoratianReal(fs);
  Poly lhs = realShiftProduct(F, 1, m - 1) * casoratianReal(concat(fs, us), entryOf(in.faults));
  std::vector<Poly> inner;
  for (const auto& u : us) inner.push_back(casoratianReal(concat(fs, u)));
  settle(in, r, lhs, casoratianReal(inner));
}

Rational realValue(const Poly& p, long x) { return p(Gaussian(x)).re; }

// Signed two-path identity with sign factor eps^m, v = last u. Returns the
// exact fourth-power verdict and fills sampling statistics.
bool casRealSignedIdentity(const std::vector<Poly>& fs, const std::vector<Poly>& us, const Faults& faults,
                           Json& info) {
  const long mp = static_cast<long>(us.size()) - 1;
  const std::vector<Poly> head(us.begin(), us.end() - 1);
  const Poly& v = us.back();
  const Poly F = casoratianReal(fs);
  std::vector<Poly> G;
  for (const auto& u : head) G.push_back(casoratianReal(concat(fs, u)));
  const Poly Gv = casoratianReal(concat(fs, v));
  const Poly A = casoratianReal(concat(fs, us));
  const Poly P = casoratianReal(concat(fs, head));
  const Poly R = casoratianReal(G);
  const Poly N = casoratianReal(concat(G, Gv));

  // Powers of F(x+k) on each side after clearing every denominator.
  std::vector<int> eL(static_cast<std::size_t>(mp + 2), 0), eR(eL.size(), 0);
  for (long j = 0; j <= mp; ++j) {
    eL[j] += 2;
    eL[j + 1] += 2;
  }
  eL[1] += 1;
  eL[mp] += 1;
  eR[0] += 1;
  eR[mp + 1] += 1;
  for (long j = 0; j < mp; ++j) {
    eR[j] += 1;
    eR[j + 1] += 2;
    eR[j + 2] += 1;
  }
  Poly left = A.pow(4) * R.pow(2) * rShift(R, 1).pow(2);
  Poly right = N.pow(4) * P.pow(2) * rShift(P, 1).pow(2);
  for (std::size_t k = 0; k < eL.size(); ++k) {
    const int common = std::min(eL[k], eR[k]);
    const Poly Fk = rShift(F, static_cast<long>(k));
    if (eL[k] > common) left *= Fk.pow(eL[k] - common);
    if (eR[k] > common) right *= Fk.pow(eR[k] - common);
  }
  const bool exact = left == right;

  // Numeric check of the sign at integer points where every radicand is positive.
  const long prec = kDefaultPrecisionBits;
  const BigFloat tol = BigFloat::fromString("1e-30", prec);
  int samples = 0, mismatches = 0;
  for (long x0 : {0L, 1L, 2L, 3L, 4L, 5L, 6L, 7L, 16L, 32L, 64L, 128L}) {
    std::vector<Rational> Fv;
    for (long k = 0; k <= mp + 1; ++k) Fv.push_back(realValue(F, x0 + k));
    const int eps = sgn(Fv[0]);
    if (eps == 0 || std::any_of(Fv.begin(), Fv.end(), [&](const Rational& q) { return sgn(q) != eps; })) continue;
    const Rational Pa = realValue(P, x0), Pb = realValue(P, x0 + 1);
    const Rational Ax = realValue(A, x0);
    if (sgn(Pa * Pb) <= 0 || sgn(Ax) == 0) continue;
    std::vector<BigFloat> w;
    for (long k = 0; k <= mp; ++k) w.push_back(BigFloat(Fv[k] * Fv[k + 1], prec).sqrt());
    auto hVal = [&](const Poly& p, long y) { return BigFloat(realValue(p, x0 + y), prec) / w[y]; };
    auto det = [&](const std::vector<Poly>& cols, long from) {
      const std::size_t n = cols.size();
      Matrix<BigFloat> mtx(n, std::vector<BigFloat>(n, BigFloat(prec)));
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) mtx[j][k] = hVal(cols[k], from + static_cast<long>(j));
      return n == 0 ? BigFloat(1, prec) : numericDeterminant(mtx, prec);
    };
    const BigFloat Q0 = det(G, 0), Q1 = det(G, 1);
    const BigFloat QQ = Q0 * Q1;
    if (QQ.sign() <= 0) continue;
    const BigFloat Nx = det(concat(G, Gv), 0);
    const BigFloat lhs = BigFloat(Ax, prec) / BigFloat(Pa * Pb, prec).sqrt();
    const int e = faults.flipEpsilon ? -eps : eps;
    const int sign = (mp % 2 == 0) ? 1 : e;
    const BigFloat ratio = BigFloat(Fv[0] * Fv[mp + 1] / (Fv[1] * Fv[mp]), prec).root(4);
    const BigFloat rhs = BigFloat(static_cast<long>(sign), prec) * ratio * Nx / QQ.sqrt();
    ++samples;
    if ((lhs - rhs).abs() > tol * maxOf(lhs.abs(), rhs.abs())) ++mismatches;
  }
  info = Json{{"exactFourthPower", exact}, {"signSamples", samples}, {"signMismatches", mismatches}};
  return exact && mismatches == 0;
}

void cCorollary(const IdentityInstance& in, CheckReport& r) {
  const auto fs = polyParts(in.fs);
  const auto us = polyParts(in.us);
  if (us.empty()) throw std::invalid_argument("corollary needs m >= 1");
  const long m = static_cast<long>(us.size());
  const Poly F = casoratianReal(fs);
  if (F.isZero()) throw std::invalid_argument("W_C[f_1..f_l] vanishes identically");
  const Poly A = casoratianReal(concat(fs, us), entryOf(in.faults));
  std::vector<Poly> inner;
  for (const auto& u : us) inner.push_back(casoratianReal(concat(fs, u)));
  const Poly B = casoratianReal(inner);
  Poly wSquares(1);
  for (long j = 0; j < m; ++j) wSquares *= rShift(F, j) * rShift(F, j + 1);
  Poly lhs = A * A * wSquares;
  Poly rhs = B * B * F * rShift(F, m);
  Json info;
  const bool signedOk = casRealSignedIdentity(fs, us, in.faults, info);
  r.params["signedIdentity"] = info;
  settle(in, r, lhs, rhs, signedOk, "signed identity with sign factor fails");
}

// --- m = 2 identities -----------------------------------------------------

void eqW(const IdentityInstance& in, CheckReport& r) {
  const ExpPoly G = wronskian(concat(in.fs, in.g));
  const ExpPoly H = wronskian(concat(in.fs, in.h));
  ExpPoly lhs = wronskian({G, H});
  ExpPoly rhs = wronskian(in.fs) * wronskian(concat(concat(in.fs, in.g), in.h), entryOf(in.faults));
  const ExpPoly thmL = wronskian(in.fs).pow(1) * wronskian(concat(in.fs, std::vector<ExpPoly>{in.g, in.h}));
  const ExpPoly thmR = wronskian({wronskian(concat(in.fs, in.g)), wronskian(concat(in.fs, in.h))});
  const bool same = lhs.str() == thmR.str() && rhs.str() == thmL.str();
  r.params["matchesTheorem"] = same;
  settle(in, r, lhs, rhs, same, "differs from the m=2 theorem output");
}

void eqG(const IdentityInstance& in, CheckReport& r) {
  const auto fs = polyParts(in.fs);
  const Poly &g = in.g.p, &h = in.h.p;
  const Poly F = casoratianImag(fs, in.gamma);
  Poly lhs = casoratianImag({casoratianImag(concat(fs, g), in.gamma), casoratianImag(concat(fs, h), in.gamma)}, in.gamma);
  Poly rhs = F * casoratianImag(concat(concat(fs, g), h), in.gamma, entryOf(in.faults));
  const Poly thmL = imagShiftProduct(F, 1, 1, 1, in.gamma) * casoratianImag(concat(fs, std::vector<Poly>{g, h}), in.gamma);
  const Poly thmR = casoratianImag({casoratianImag(concat(fs, g), in.gamma), casoratianImag(concat(fs, h), in.gamma)},
                                   in.gamma);
  const bool same = lhs.str() == thmR.str() && rhs.str() == thmL.str();
  r.params["matchesTheorem"] = same;
  settle(in, r, lhs, rhs, same, "differs from the m=2 theorem output");
}

void eqC(const IdentityInstance& in, CheckReport& r) {
  const auto fs = polyParts(in.fs);
  const Poly &g = in.g.p, &h = in.h.p;
  const Poly F = casoratianReal(fs);
  Poly lhs = casoratianReal({casoratianReal(concat(fs, g)), casoratianReal(concat(fs, h))});
  Poly rhs = rShift(F, in.faults.eq3Shift) * casoratianReal(concat(concat(fs, g), h), entryOf(in.faults));
  const Poly thmL = realShiftProduct(F, 1, 1) * casoratianReal(concat(fs, std::vector<Poly>{g, h}));
  const Poly thmR = casoratianReal({casoratianReal(concat(fs, g)), casoratianReal(concat(fs, h))});
  const bool same = lhs.str() == thmR.str() && rhs.str() == thmL.str();
  r.params["matchesTheorem"] = same;
  settle(in, r, lhs, rhs, same, "differs from the m=2 theorem output");
}

// --- sum formula and classical limit --------------------------------------

void sumFormula(const IdentityInstance& in, CheckReport& r) {
  if (in.jMax < 1) throw std::invalid_argument("jMax must be >= 1");
  long checked = 0, bad = 0;
  Json failures = Json::array();
  for (long j = 1; j <= in.jMax; ++j) {
    BigInt fact = 1;
    for (long k = 2; k <= j - 1; ++k) fact *= k;
    for (long s = 0; s <= j - 1; ++s) {
      const Rational got = binomialMomentSum(j, s);
      Rational want = (s == j - 1) ? Rational(fact) : Rational(0);
      if ((j - 1) % 2 && s == j - 1) want = -want;
      ++checked;
      if (got != want) {
        ++bad;
        failures.push_back(Json{{"j", j}, {"s", s}, {"sum", toString(got)}, {"expected", toString(want)}});
      }
    }
  }
  r.params["cases"] = checked;
  r.lhs = std::to_string(checked - bad) + " of " + std::to_string(checked) + " sums match";
  r.rhs = "(-1)^{j-1} (j-1)! delta_{s,j-1}";
  r.verdict = bad == 0 ? Verdict::Pass : Verdict::Fail;
  if (bad) {
    r.message = std::to_string(bad) + " mismatching (j, s) pairs";
    r.params["failures"] = failures;
  }
}

void classicalLimit(const IdentityInstance& in, CheckReport& r) {
  const auto fs = polyParts(in.fs);
  if (sgn(in.gamma) <= 0) throw std::invalid_argument("gamma0 must be positive");
  if (in.halvings < 1) throw std::invalid_argument("need at least one halving");
  const long n = static_cast<long>(fs.size());
  const long k = n * (n - 1) / 2;
  const Poly W = wronskianPoly(fs);
  std::vector<Rational> errs;
  Json steps = Json::array();
  Rational gamma = in.gamma;
  for (long step = 0; step <= in.halvings; ++step) {
    const Poly scaled = casoratianImag(fs, gamma) * Gaussian(power(gamma, -k));
    const Poly diff = scaled - W;
    guard(diff, in.budgetBits);
    Rational e;
    for (const auto& c : diff.coeffs()) e = std::max(e, c.maxAbs());
    errs.push_back(e);
    steps.push_back(Json{{"gamma", toString(gamma)}, {"maxCoefficientError", e.get_d()}});
    gamma /= 2;
  }
  Json orders = Json::array();
  double lastOrder = 0.0;
  for (std::size_t i = 1; i < errs.size(); ++i) {
    if (sgn(errs[i]) == 0 || sgn(errs[i - 1]) == 0) {
      orders.push_back(nullptr);
      continue;
    }
    lastOrder = std::log2(Rational(errs[i - 1] / errs[i]).get_d());
    orders.push_back(lastOrder);
  }
  r.params["steps"] = steps;
  r.params["orders"] = orders;
  const Rational& last = errs.back();
  const Rational& prev = errs[errs.size() - 2];
  bool ok;
  if (sgn(last) == 0) ok = true;
  else ok = sgn(prev) > 0 && prev / last >= 2;
  r.lhs = "max |gamma^{-" + std::to_string(k) + "} W_gamma - W| = " + std::to_string(last.get_d());
  r.rhs = "observed order " + (sgn(last) == 0 ? std::string("exact") : std::to_string(lastOrder));
  r.verdict = ok ? Verdict::Pass : Verdict::Fail;
  if (!ok) r.message = "observed order below 1 at the last halving";
}

const std::map<std::string, Impl>& implementations() {
  static const std::map<std::string, Impl> table = {
      {"W.quotient", wQuotient},       {"W.oneReduction", wOneReduction},   {"W.gauge", wGauge},
      {"W.nesting", wNesting},         {"W.theorem", wTheorem},             {"W.corollary", wCorollary},
      {"Wg.quotient", gQuotient},      {"Wg.oneReduction", gOneReduction},  {"Wg.gauge", gGauge},
      {"Wg.nesting", gNesting},        {"Wg.theorem", gTheorem},            {"Wg.corollary", gCorollary},
      {"Wc.quotient", cQuotient},      {"Wc.oneReduction", cOneReduction},  {"Wc.gauge", cGauge},
      {"Wc.nesting", cNesting},        {"Wc.theorem", cTheorem},            {"Wc.corollary", cCorollary},
      {"eq.W", eqW},                   {"eq.Wg", eqG},                      {"eq.Wc", eqC},
      {"sumFormula", sumFormula},      {"classicalLimit", classicalLimit}};
  return table;
}

Json paramsOf(const IdentityInstance& in) {
  Json degrees = Json::array();
  for (const auto& f : in.fs) degrees.push_back(f.p.degree());
  Json uDegrees = Json::array();
  for (const auto& u : in.us) uDegrees.push_back(u.p.degree());
  Json p{{"n", in.fs.size()}, {"m", in.us.size()}, {"degrees", degrees}, {"uDegrees", uDegrees}};
  if (in.id.rfind("Wg.", 0) == 0 || in.id == "eq.Wg" || in.id == "classicalLimit") p["gamma"] = toString(in.gamma);
  if (in.id == "sumFormula") p = Json{{"jMax", in.jMax}};
  if (in.id == "classicalLimit") p["halvings"] = in.halvings;
  if (in.faults.any()) p["faults"] = toJson(in.faults);
  return p;
}

}  // namespace

CheckReport runInstance(const IdentityInstance& inst) {
  CheckReport r;
  r.identityId = inst.id;
  r.trial = inst.trial;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.params = paramsOf(inst);
    const auto& table = implementations();
    auto it = table.find(inst.id);
    if (it == table.end()) throw std::invalid_argument("unknown identity id '" + inst.id + "'");
    it->second(inst, r);
  } catch (const BudgetExceeded& e) {
    r.verdict = Verdict::Error;
    r.message = std::string("budget exceeded: ") + e.what();
  } catch (const std::exception& e) {
    r.verdict = Verdict::Error;
    r.message = e.what();
  }
  if (r.verdict != Verdict::Pass) r.witness = toJson(inst);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace {
IdentityInstance base(const std::string& id, const Faults& faults) {
  IdentityInstance in;
  in.id = id;
  in.faults = faults;
  return in;
}
}  // namespace

CheckReport checkWronskianQuotient(const ExpPoly& f, const ExpPoly& g, const Faults& faults) {
  auto in = base("W.quotient", faults);
  in.f = f;
  in.g = g;
  return runInstance(in);
}
CheckReport checkWronskianOneReduction(const std::vector<ExpPoly>& fs, const Faults& faults) {
  auto in = base("W.oneReduction", faults);
  in.fs = fs;
  return runInstance(in);
}
CheckReport checkWronskianGauge(const std::vector<ExpPoly>& fs, const ExpPoly& g, const Faults& faults) {
  auto in = base("W.gauge", faults);
  in.fs = fs;
  in.g = g;
  return runInstance(in);
}
CheckReport checkWronskianNesting(const std::vector<ExpPoly>& fs, const ExpPoly& g, const Faults& faults) {
  auto in = base("W.nesting", faults);
  in.fs = fs;
  in.g = g;
  return runInstance(in);
}
CheckReport checkWronskianTheorem(const std::vector<ExpPoly>& fs, const std::vector<ExpPoly>& us,
                                  const Faults& faults) {
  auto in = base("W.theorem", faults);
  in.fs = fs;
  in.us = us;
  return runInstance(in);
}
CheckReport checkWronskianCorollary(const std::vector<ExpPoly>& fs, const std::vector<ExpPoly>& us,
                                    const Faults& faults) {
  auto in = base("W.corollary", faults);
  in.fs = fs;
  in.us = us;
  return runInstance(in);
}

CheckReport checkCasImagQuotient(const Poly& f, const Poly& g, const Rational& gamma, const Faults& faults) {
  auto in = base("Wg.quotient", faults);
  in.f = f;
  in.g = g;
  in.gamma = gamma;
  return runInstance(in);
}
CheckReport checkCasImagOneReduction(const std::vector<Poly>& fs, const Rational& gamma, const Faults& faults) {
  auto in = base("Wg.oneReduction", faults);
  in.fs = asExpPolys(fs);
  in.gamma = gamma;
  return runInstance(in);
}
CheckReport checkCasImagGauge(const std::vector<Poly>& fs, const Poly& g, const Rational& gamma,
                              const Faults& faults) {
  auto in = base("Wg.gauge", faults);
  in.fs = asExpPolys(fs);
  in.g = g;
  in.gamma = gamma;
  return runInstance(in);
}
CheckReport checkCasImagNesting(const std::vector<Poly>& fs, const Poly& g, const Rational& gamma,
                                const Faults& faults) {
  auto in = base("Wg.nesting", faults);
  in.fs = asExpPolys(fs);
  in.g = g;
  in.gamma = gamma;
  return runInstance(in);
}
CheckReport checkCasImagTheorem(const std::vector<Poly>& fs, const std::vector<Poly>& us, const Rational& gamma,
                                const Faults& faults) {
  auto in = base("Wg.theorem", faults);
  in.fs = asExpPolys(fs);
  in.us = asExpPolys(us);
  in.gamma = gamma;
  return runInstance(in);
}
CheckReport checkCasImagCorollary(const std::vector<Poly>& fs, const std::vector<Poly>& us, const Rational& gamma,
                                  const Faults& faults) {
  auto in = base("Wg.corollary", faults);
  in.fs = asExpPolys(fs);
  in.us = asExpPolys(us);
  in.gamma = gamma;
  return runInstance(in);
}

CheckReport checkCasRealQuotient(const Poly& f, const Poly& g, const Faults& faults) {
  auto in = base("Wc.quotient", faults);
  in.f = f;
  in.g = g;
  return runInstance(in);
}
CheckReport checkCasRealOneReduction(const std::vector<Poly>& fs, const Faults& faults) {
  auto in = base("Wc.oneReduction", faults);
  in.fs = asExpPolys(fs);
  return runInstance(in);
}
CheckReport checkCasRealGauge(const std::vector<Poly>& fs, const Poly& g, const Faults& faults) {
  auto in = base("Wc.gauge", faults);
  in.fs = asExpPolys(fs);
  in.g = g;
  return runInstance(in);
}
CheckReport checkCasRealNesting(const std::vector<Poly>& fs, const Poly& g, const Faults& faults) {
  auto in = base("Wc.nesting", faults);
  in.fs = asExpPolys(fs);
  in.g = g;
  return runInstance(in);
}
CheckReport checkCasRealTheorem(const std::vector<Poly>& fs, const std::vector<Poly>& us, const Faults& faults) {
  auto in = base("Wc.theorem", faults);
  in.fs = asExpPolys(fs);
  in.us = asExpPolys(us);
  return runInstance(in);
}
CheckReport checkCasRealCorollary(const std::vector<Poly>& fs, const std::vector<Poly>& us, const Faults& faults) {
  auto in = base("Wc.corollary", faults);
  in.fs = asExpPolys(fs);
  in.us = asExpPolys(us);
  return runInstance(in);
}

CheckReport checkEquationW(const std::vector<ExpPoly>& fs, const ExpPoly& g, const ExpPoly& h, const Faults& faults) {
  auto in = base("eq.W", faults);
  in.fs = fs;
  in.g = g;
  in.h = h;
  return runInstance(in);
}
CheckReport checkEquationImag(const std::vector<Poly>& fs, const Poly& g, const Poly& h, const Rational& gamma,
                              const Faults& faults) {
  auto in = base("eq.Wg", faults);
  in.fs = asExpPolys(fs);
  in.g = g;
  in.h = h;
  in.gamma = gamma;
  return runInstance(in);
}
CheckReport checkEquationReal(const std::vector<Poly>& fs, const Poly& g, const Poly& h, const Faults& faults) {
  auto in = base("eq.Wc", faults);
  in.fs = asExpPolys(fs);
  in.g = g;
  in.h = h;
  return runInstance(in);
}

CheckReport checkSumFormula(long jMax) {
  IdentityInstance in;
  in.id = "sumFormula";
  in.jMax = jMax;
  return runInstance(in);
}

CheckReport checkClassicalLimit(const std::vector<Poly>& fs, const Rational& gamma0, long halvings) {
  IdentityInstance in;
  in.id = "classicalLimit";
  in.fs = asExpPolys(fs);
  in.gamma = gamma0;
  in.halvings = halvings;
  return runInstance(in);
}

}  // namespace casorati
