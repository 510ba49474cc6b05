#include "casorati/idqm.hpp"

#include <chrono>

namespace casorati {

namespace {

using Clock = std::chrono::steady_clock;

CheckReport baseReport(const std::string& id) {
  CheckReport r;
  r.identityId = id;
  return r;
}

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// x_j^{(n)} - x for j = 1..n, as imaginary multiples of gamma
Rational offset(long n, long j, const Rational& gamma) {
  Rational o = Rational(n + 1, 2) - j;
  o.canonicalize();
  return o * gamma;
}

FactoredProduct casImagFactor(const std::vector<Poly>& fs, const Rational& gamma, const EntryFault* fault = nullptr) {
  return FactoredProduct::of(casoratianImag(fs, gamma, fault));
}

// prod_{j=1}^{n} rho(x_j^{(n)} + extra)
FactoredProduct pointProduct(const FactoredProduct& rho, long n, const Rational& gamma, const Rational& extra) {
  FactoredProduct out;
  for (long j = 1; j <= n; ++j) out *= rho.shiftedImag(offset(n, j, gamma) + extra);
  return out;
}

FactoredProduct halfRoot(const FactoredProduct& w, const Rational& gamma) {
  return (w.shiftedImag(-gamma / 2) * w.shiftedImag(gamma / 2)).pow(Rational(1, 2));
}

// V_Dv from l virtual seeds
FactoredProduct virtualPotential(const FactoredProduct& V, const std::vector<Poly>& f, const Rational& gamma,
                                 const Poly& groundSeed) {
  const long l = static_cast<long>(f.size());
  const FactoredProduct F = casImagFactor(f, gamma);
  std::vector<Poly> withGround = f;
  withGround.push_back(groundSeed);
  const FactoredProduct G = casImagFactor(withGround, gamma);
  Rational half = Rational(l) * gamma / 2;
  Rational halfPlus = Rational(l + 2) * gamma / 2;
  return (V.shiftedImag(-half) * V.star().shiftedImag(-halfPlus)).pow(Rational(1, 2)) * F.shiftedImag(gamma / 2) /
         F.shiftedImag(-gamma / 2) * G.shiftedImag(-gamma) / G;
}

// The shared prefactor (prod_j V V*)^{1/4} with s = number of steps.
FactoredProduct quarterPrefactor(const FactoredProduct& V, const Rational& gamma, long s) {
  return potentialPairProduct(V, gamma, s, 0, s - 1).pow(Rational(1, 4));
}

std::vector<Rational> signPoints() {
  std::vector<Rational> pts;
  for (long k = 0; k <= 12; ++k) {
    pts.emplace_back(k);
    if (k) pts.emplace_back(-k);
  }
  for (long k = 1; k <= 7; k += 2) pts.push_back(Rational(k, 2));
  for (auto& p : pts) p.canonicalize();
  return pts;
}

}  // namespace

RationalFn star(const RationalFn& f) { return f.conj(); }

FactoredProduct potentialPairProduct(const FactoredProduct& V, const Rational& gamma, long s, long jFirst,
                                     long jLast) {
  FactoredProduct out;
  const FactoredProduct Vs = V.star();
  for (long j = jFirst; j <= jLast; ++j) {
    Rational o = Rational(s, 2) - j;
    o.canonicalize();
    out *= V.shiftedImag(o * gamma) * Vs.shiftedImag(-o * gamma);
  }
  return out;
}

RadicalRationalFn deformedPotentialVD(const RationalFn& V, const std::vector<Poly>& seeds, const Rational& gamma,
                                      const Poly& muState) {
  const long M = static_cast<long>(seeds.size());
  const Poly W = casoratianImag(seeds, gamma);
  std::vector<Poly> withMu = seeds;
  withMu.push_back(muState);
  const Poly Wmu = casoratianImag(withMu, gamma);
  RadicalRationalFn out;
  out.rad = V.shifted(Gaussian(Rational(0), -Rational(M) * gamma / 2)) *
            star(V).shifted(Gaussian(Rational(0), -Rational(M + 2) * gamma / 2));
  out.cof = RationalFn(W.shifted(Gaussian(Rational(0), gamma / 2)), W.shifted(Gaussian(Rational(0), -gamma / 2))) *
            RationalFn(Wmu.shifted(Gaussian(Rational(0), -gamma)), Wmu);
  return out;
}

CheckReport checkPrefactorGG(const RationalFn& V, const Rational& gamma, long l, long m) {
  const auto t0 = Clock::now();
  CheckReport r = baseReport("idqm.prefactorGG");
  r.params = {{"V", toJson(V)}, {"gamma", toString(gamma)}, {"l", l}, {"m", m}};
  try {
    const FactoredProduct Vf = FactoredProduct::of(V);
    const FactoredProduct G = quarterPrefactor(Vf, gamma, l);
    const FactoredProduct lhs =
        pointProduct(G, m + 1, gamma, Rational(0)) /
        (pointProduct(G, m, gamma, -gamma / 2) * pointProduct(G, m, gamma, gamma / 2)).pow(Rational(1, 2));
    const FactoredProduct rhs =
        (potentialPairProduct(Vf, gamma, l + m, 0, l - 1) * potentialPairProduct(Vf, gamma, l + m, m, l + m - 1))
            .pow(Rational(1, 8));
    const RationalFn a = lhs.pow(Rational(8)).toRationalFn();
    const RationalFn b = rhs.pow(Rational(8)).toRationalFn();
    r.lhs = abbreviate(a.str(), 400);
    r.rhs = abbreviate(b.str(), 400);
    r.verdict = a == b ? Verdict::Pass : Verdict::Fail;
    if (!r.passed()) r.message = "eighth powers differ";
  } catch (const std::exception& e) {
    r.verdict = Verdict::Error;
    r.message = e.what();
  }
  if (!r.passed()) r.witness = r.params;
  r.seconds = since(t0);
  return r;
}

CheckReport checkPotentialProductIdentity(const RationalFn& V, const std::vector<Poly>& seeds, const Rational& gamma,
                                          long m, const Poly& groundSeed) {
  const auto t0 = Clock::now();
  CheckReport r = baseReport("idqm.potentialProduct");
  const long l = static_cast<long>(seeds.size());
  r.params = {{"V", toJson(V)}, {"seeds", toJson(seeds)}, {"gamma", toString(gamma)},
              {"m", m},                 {"groundSeed", toJson(groundSeed)}};
  try {
    const FactoredProduct Vf = FactoredProduct::of(V);
    const FactoredProduct VDv = virtualPotential(Vf, seeds, gamma, groundSeed);
    const FactoredProduct lhs = potentialPairProduct(VDv, gamma, m, 0, m - 1);
    const FactoredProduct F = casImagFactor(seeds, gamma);
    const Rational up = Rational(m + 1) * gamma / 2;
    const Rational down = Rational(m - 1) * gamma / 2;
    const FactoredProduct rhs =
        (potentialPairProduct(Vf, gamma, l + m, 0, m - 1) * potentialPairProduct(Vf, gamma, l + m, l, l + m - 1))
            .pow(Rational(1, 2)) *
        F.shiftedImag(up) * F.shiftedImag(-up) / (F.shiftedImag(-down) * F.shiftedImag(down));
    const RationalFn a = lhs.pow(Rational(2)).toRationalFn();
    const RationalFn b = rhs.pow(Rational(2)).toRationalFn();
    r.lhs = abbreviate(a.str(), 400);
    r.rhs = abbreviate(b.str(), 400);
    r.verdict = a == b ? Verdict::Pass : Verdict::Fail;
    if (!r.passed()) r.message = "squares differ";
  } catch (const std::exception& e) {
    r.verdict = Verdict::Error;
    r.message = e.what();
  }
  if (!r.passed()) r.witness = r.params;
  r.seconds = since(t0);
  return r;
}

CheckReport twoPathCompareIdQM(const RationalFn& V, const std::vector<Poly>& dV, const std::vector<Poly>& dE,
                               const Poly& v, const Rational& gamma, const Poly& groundSeed, const Faults& faults) {
  const auto t0 = Clock::now();
  CheckReport r = baseReport("idqm.twoPath");
  const long l = static_cast<long>(dV.size());
  const long m = static_cast<long>(dE.size());
  r.params = {{"V", toJson(V)},       {"dV", toJson(dV)},
              {"dE", toJson(dE)},           {"v", toJson(v)},
              {"gamma", toString(gamma)},     {"groundSeed", toJson(groundSeed)},
              {"faults", toJson(faults)}};
  try {
    const FactoredProduct Vf = FactoredProduct::of(V);

    // direct: all l + m seeds at once
    std::vector<Poly> psi = dV;
    psi.insert(psi.end(), dE.begin(), dE.end());
    std::vector<Poly> psiV = psi;
    psiV.push_back(v);
    const FactoredProduct direct = quarterPrefactor(Vf, gamma, l + m) *
                                   casImagFactor(psiV, gamma, faults.entry ? &*faults.entry : nullptr) /
                                   halfRoot(casImagFactor(psi, gamma), gamma);

    // nested: virtual seeds first, then the eigen seeds on top
    const FactoredProduct rho = quarterPrefactor(Vf, gamma, l) / halfRoot(casImagFactor(dV, gamma), gamma);
    std::vector<Poly> cof;
    for (const auto& u : dE) {
      std::vector<Poly> fu = dV;
      fu.push_back(u);
      cof.push_back(casoratianImag(fu, gamma));
    }
    std::vector<Poly> fv = dV;
    fv.push_back(v);
    std::vector<Poly> cofV = cof;
    cofV.push_back(casoratianImag(fv, gamma));
    const FactoredProduct outerNum = pointProduct(rho, m + 1, gamma, Rational(0)) * casImagFactor(cofV, gamma);
    const FactoredProduct outerDen = pointProduct(rho, m, gamma, Rational(0)) * casImagFactor(cof, gamma);
    const FactoredProduct VDv = virtualPotential(Vf, dV, gamma, groundSeed);
    const FactoredProduct nested = quarterPrefactor(VDv, gamma, m) * outerNum / halfRoot(outerDen, gamma);

    r.lhs = abbreviate(direct.str(), 400);
    r.rhs = abbreviate(nested.str(), 400);
    BigInt L;
    if (!equalUpToRootOfUnity(direct, nested, &L)) {
      r.verdict = Verdict::Fail;
      r.message = "powers differ";
    } else {
      r.params["power"] = L.get_str();
      // Every radical block is star-invariant, hence positive on the real
      // line; the relative sign is carried by the two outer Casoratians.
      // Nesting predicts it as sgn prod_j F(x_j^{(m)}).
      const Poly a = casoratianImag(psiV, gamma, faults.entry ? &*faults.entry : nullptr);
      const Poly b = casoratianImag(cofV, gamma);
      const Poly F = casoratianImag(dV, gamma);
      bool found = false;
      for (const Rational& x0 : signPoints()) {
        const Gaussian av = a(Gaussian(x0)), bv = b(Gaussian(x0));
        Gaussian pf(1);
        for (long j = 1; j <= m; ++j) pf *= F(Gaussian(x0, offset(m, j, gamma)));
        if (av.isZero() || bv.isZero() || pf.isZero()) continue;
        found = true;
        const int observed = sgn(av.re) * sgn(bv.re);
        const int predicted = sgn(pf.re);
        r.params["signPoint"] = toString(x0);
        r.params["relativeSign"] = observed;
        r.params["predictedSign"] = predicted;
        if (!av.isReal() || !bv.isReal() || !pf.isReal()) {
          r.verdict = Verdict::Fail;
          r.message = "outer Casoratian not real at a real point";
        } else if (observed != predicted) {
          r.verdict = Verdict::Fail;
          r.message = "relative sign " + std::to_string(observed) + " at x=" + toString(x0) + ", expected " +
                      std::to_string(predicted);
        } else {
          r.verdict = Verdict::Pass;
        }
        break;
      }
      if (!found) {
        r.verdict = Verdict::Inconclusive;
        r.message = "powers agree; no real point with nonzero Casoratians";
      }
    }
  } catch (const std::exception& e) {
    r.verdict = Verdict::Error;
    r.message = e.what();
  }
  if (!r.passed()) r.witness = r.params;
  r.seconds = since(t0);
  return r;
}

}  // namespace casorati
