#include "casorati/oqm.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace casorati {

long IndexSet::mu() const {
  long n = 0;
  while (std::find(dE.begin(), dE.end(), n) != dE.end()) ++n;
  return n;
}

void IndexSet::validate() const {
  for (const auto* v : {&dV, &dE}) {
    std::set<long> seen;
    for (long k : *v) {
      if (k < 0) throw std::invalid_argument("negative seed label " + std::to_string(k));
      if (!seen.insert(k).second) throw std::invalid_argument("repeated seed label " + std::to_string(k));
    }
  }
}

Json toJson(const IndexSet& s) { return Json{{"dV", s.dV}, {"dE", s.dE}}; }

Poly hermite(long n) {
  Poly prev(1);
  if (n == 0) return prev;
  Poly cur = Poly::monomial(Gaussian(2), 1);
  for (long k = 1; k < n; ++k) {
    Poly next = Poly::monomial(Gaussian(2), 1) * cur - Gaussian(2 * k) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ExpPoly OqmModel::eigen(long n) const { return ExpPoly(hermite(n), Rational(-1), Rational(0)); }

ExpPoly OqmModel::virtualState(long v) const {
  // i^{-v} H_v(ix): coefficient c_k picks up i^{k-v}, always real
  const Poly h = hermite(v);
  std::vector<Gaussian> c;
  for (int k = 0; k <= h.degree(); ++k) c.push_back(h.coeff(k) * imagUnitPower(k - v));
  return ExpPoly(Poly(c), Rational(1), Rational(0));
}

OqmModel buildHarmonicModel(long nMax, long vMax) {
  OqmModel m;
  m.U = Poly::monomial(Gaussian(1), 2) - Poly(1);
  m.nMax = nMax;
  m.vMax = vMax;
  return m;
}

bool verifySchrodinger(const RationalFn& U, const ExpPolyRatio& phi, const Rational& E) {
  const ExpPolyRatio d2 = phi.derivative().derivative();
  const ExpPolyRatio lhs = ExpPolyRatio(U - RationalFn(Gaussian(E)), Rational(0), Rational(0)) * phi;
  return lhs == d2;
}

std::vector<ExpPoly> seedsFor(const OqmModel& model, const IndexSet& seeds) {
  seeds.validate();
  std::vector<ExpPoly> out;
  for (long v : seeds.dV) out.push_back(model.virtualState(v));
  for (long e : seeds.dE) out.push_back(model.eigen(e));
  return out;
}

RationalFn deformedPotential(const OqmModel& model, const IndexSet& seeds) {
  const ExpPoly W = wronskian(seedsFor(model, seeds));
  if (W.isZero()) throw std::domain_error("seed Wronskian vanishes");
  const Poly& p = W.p;
  // (log W)'' = (p'' p - p'^2)/p^2 + a
  const RationalFn logpp(p.derivative().derivative() * p - p.derivative() * p.derivative(), p * p);
  return RationalFn(model.U) - Gaussian(2) * (logpp + RationalFn(Gaussian(W.a)));
}

ExpPolyRatio deformedEigenfunction(const OqmModel& model, const IndexSet& seeds, long n, const EntryFault* fault) {
  if (std::find(seeds.dE.begin(), seeds.dE.end(), n) != seeds.dE.end())
    throw std::invalid_argument("state " + std::to_string(n) + " was removed by the deformation");
  std::vector<ExpPoly> s = seedsFor(model, seeds);
  const ExpPoly den = wronskian(s);
  s.push_back(model.eigen(n));
  return ExpPolyRatio(wronskian(s, fault), den);
}

ExpPolyRatio nestedEigenfunction(const OqmModel& model, const IndexSet& seeds, long n) {
  if (std::find(seeds.dE.begin(), seeds.dE.end(), n) != seeds.dE.end())
    throw std::invalid_argument("state " + std::to_string(n) + " was removed by the deformation");
  IndexSet virt{seeds.dV, {}};
  const std::vector<ExpPoly> f = seedsFor(model, virt);
  const ExpPoly F = wronskian(f);
  auto step = [&](long k) {
    std::vector<ExpPoly> fk = f;
    fk.push_back(model.eigen(k));
    return ExpPolyRatio(wronskian(fk), F);
  };
  std::vector<ExpPolyRatio> cols;
  for (long e : seeds.dE) cols.push_back(step(e));
  const ExpPolyRatio den = wronskianRatio(cols);
  cols.push_back(step(n));
  return wronskianRatio(cols) / den;
}

CheckReport twoPathCompare(const OqmModel& model, const IndexSet& seeds, long n, const Faults& faults) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckReport r;
  r.identityId = "oqm.twoPath";
  r.params = {{"seeds", toJson(seeds)}, {"n", n}, {"faults", toJson(faults)}};
  try {
    const ExpPolyRatio direct = deformedEigenfunction(model, seeds, n, faults.entry ? &*faults.entry : nullptr);
    const ExpPolyRatio nested = nestedEigenfunction(model, seeds, n);
    const RationalFn UD = deformedPotential(model, seeds);
    const bool schr = verifySchrodinger(UD, direct, model.eigenEnergy(n));
    const bool same = direct == nested;
    r.params["schrodinger"] = schr;
    r.params["pathsEqual"] = same;
    r.lhs = abbreviate(direct.str(), 400);
    r.rhs = abbreviate(nested.str(), 400);
    r.verdict = schr && same ? Verdict::Pass : Verdict::Fail;
    if (!same) r.message = "routes differ";
    else if (!schr) r.message = "deformed eigenfunction does not solve the deformed equation";
  } catch (const std::exception& e) {
    r.verdict = Verdict::Error;
    r.message = e.what();
  }
  if (!r.passed()) r.witness = r.params;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

bool kreinAdlerCheck(const std::vector<long>& dE) {
  if (dE.empty()) return true;
  const long top = *std::max_element(dE.begin(), dE.end()) + 1;
  for (long m = 0; m <= top; ++m) {
    int sign = 1;
    for (long d : dE) {
      if (m == d) {
        sign = 0;
        break;
      }
      if (m < d) sign = -sign;
    }
    if (sign < 0) return false;
  }
  return true;
}

DegreeCensus degreeCensus(const OqmModel& model, const IndexSet& seeds, long nMax, CensusPath path) {
  DegreeCensus c;
  const ExpPoly W = wronskian(seedsFor(model, seeds));
  const long xi = W.p.degree();
  std::set<long> seen;
  for (long n = 0; n <= nMax; ++n) {
    if (std::find(seeds.dE.begin(), seeds.dE.end(), n) != seeds.dE.end()) continue;
    const ExpPolyRatio phi =
        path == CensusPath::Direct ? deformedEigenfunction(model, seeds, n) : nestedEigenfunction(model, seeds, n);
    const long d = phi.r.num().degree() + xi - phi.r.den().degree();
    c.degrees.emplace_back(n, d);
    seen.insert(d);
  }
  if (!seen.empty())
    for (long d = 0; d < *seen.rbegin(); ++d)
      if (!seen.count(d)) c.missing.insert(d);
  c.ell = static_cast<long>(c.missing.size());
  c.prefix = c.missing.empty() || (*c.missing.rbegin() == c.ell - 1);
  return c;
}

Json toJson(const DegreeCensus& c) {
  Json d = Json::array();
  for (const auto& [n, deg] : c.degrees) d.push_back({n, deg});
  return Json{{"degrees", d}, {"missing", c.missing}, {"ell", c.ell}, {"prefix", c.prefix}};
}

}  // namespace casorati
