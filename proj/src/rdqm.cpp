#include "casorati/rdqm.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <ostream>

namespace casorati {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

BigFloat tenTo(long e, long prec) { return BigFloat(10, prec).pow(e); }

BigFloat relDev(const BigFloat& a, const BigFloat& b) {
  BigFloat scale = maxOf(a.abs(), b.abs());
  if (scale.isZero()) return BigFloat(0, a.precision());
  return (a - b).abs() / scale;
}

std::vector<GridFn<BigFloat>> seedValues(const std::vector<RdqmSeed>& seeds, std::size_t count) {
  std::vector<GridFn<BigFloat>> fs;
  for (std::size_t i = 0; i < count && i < seeds.size(); ++i) fs.push_back(seeds[i].values);
  return fs;
}

GridFn<BigFloat> casOf(const RdqmModel& model, std::vector<GridFn<BigFloat>> fs) {
  return casoratianReal(fs, model.one(), model.xMax);
}

int sgnInt(const Rational& q) { return sgn(q) > 0 ? 1 : (sgn(q) < 0 ? -1 : 0); }

// sqrt(prod_{j=1}^{M} B(x+j-1) D(x+j)) ^ {1/2} = sqrt(prod hop(x+j-1))
BigFloat quarterBD(const RdqmModel& model, long x, long M) {
  BigFloat p = model.one();
  for (long j = 1; j <= M; ++j) p *= model.hop.at(static_cast<std::size_t>(x + j - 1));
  return p.sqrt();
}

}  // namespace

Rational RdqmModel::Bq(long x) const {
  Rational r = c * (Rational(x) + beta) / (1 - c);
  r.canonicalize();
  return r;
}

Rational RdqmModel::Dq(long x) const {
  Rational r = Rational(x) / (1 - c);
  r.canonicalize();
  return r;
}

BigFloat RdqmModel::residualBound() const { return BigFloat(1, precisionBits) / tenTo(precisionBits / 4, precisionBits); }

BigFloat RdqmModel::residual(const GridFn<BigFloat>& psi, const Rational& E) const {
  const BigFloat e(E, precisionBits);
  BigFloat worst(0, precisionBits), norm(0, precisionBits);
  for (long x = 0; x <= psi.xMax(); ++x) norm = maxOf(norm, psi.at(x).abs());
  for (long x = 0; x + 1 <= psi.xMax(); ++x) {
    BigFloat h = (B(x) + D(x) - e) * psi.at(x) - hop.at(static_cast<std::size_t>(x)) * psi.at(x + 1);
    if (x > 0) h -= hop.at(static_cast<std::size_t>(x - 1)) * psi.at(x - 1);
    worst = maxOf(worst, h.abs());
  }
  return norm.isZero() ? worst : worst / norm;
}

Rational meixnerP(const Rational& beta, const Rational& c, long n, long x) {
  Rational sum = 0, term = 1;
  const Rational z = 1 - 1 / c;
  for (long k = 0; k <= std::min(n, x); ++k) {
    sum += term;
    // ratio of consecutive terms
    term *= Rational(-n + k) * Rational(-x + k) / ((beta + k) * Rational(k + 1)) * z;
  }
  sum.canonicalize();
  return sum;
}

RdqmModel buildMeixnerModel(const Rational& beta, const Rational& c, long nMax, long xMax, long precisionBits) {
  if (sgn(beta) <= 0) throw std::invalid_argument("Meixner model needs beta > 0");
  if (sgn(c) <= 0 || c >= 1) throw std::invalid_argument("Meixner model needs 0 < c < 1");
  if (nMax < 0 || xMax < 2) throw std::invalid_argument("Meixner model needs nMax >= 0 and xMax >= 2");
  RdqmModel m;
  m.beta = beta;
  m.c = c;
  m.nMax = nMax;
  m.xMax = xMax;
  m.precisionBits = precisionBits;
  for (long x = 0; x <= xMax; ++x) m.hop.push_back(BigFloat(m.Bq(x) * m.Dq(x + 1), precisionBits).sqrt());
  GridFn<BigFloat> ground;
  Rational sq = 1;
  for (long x = 0; x <= xMax; ++x) {
    ground.values.push_back(BigFloat(sq, precisionBits).sqrt());
    sq *= c * (beta + x) / Rational(x + 1);
  }
  m.worstResidual = BigFloat(0, precisionBits);
  for (long n = 0; n <= nMax; ++n) {
    GridFn<BigFloat> f;
    f.energy = BigFloat(n, precisionBits);
    for (long x = 0; x <= xMax; ++x) f.values.push_back(ground.values[x] * BigFloat(meixnerP(beta, c, n, x), precisionBits));
    const BigFloat r = m.residual(f, Rational(n));
    m.worstResidual = maxOf(m.worstResidual, r);
    if (r > m.residualBound())
      throw std::runtime_error("Meixner eigenpair n=" + std::to_string(n) + " has residual " + r.str(6));
    m.phi.push_back(std::move(f));
  }
  return m;
}

std::vector<Rational> seedGauge(const RdqmModel& model, const Rational& E) {
  std::vector<Rational> p{Rational(1)};
  for (long x = 0; x < model.xMax; ++x) {
    const Rational b = model.Bq(x);
    if (sgn(b) == 0) throw SingularDeformation("B vanishes at x=" + std::to_string(x));
    const Rational prev = x ? p[x - 1] : Rational(0);
    Rational next = p[x] + (model.Dq(x) * (p[x] - prev) - E * p[x]) / b;
    next.canonicalize();
    p.push_back(next);
  }
  return p;
}

GridFn<BigFloat> solveSeedAtEnergy(const RdqmModel& model, const Rational& E) {
  const std::vector<Rational> p = seedGauge(model, E);
  GridFn<BigFloat> psi;
  psi.energy = BigFloat(E, model.precisionBits);
  Rational sq = 1;
  for (long x = 0; x <= model.xMax; ++x) {
    psi.values.push_back(BigFloat(sq, model.precisionBits).sqrt() * BigFloat(p[x], model.precisionBits));
    sq *= model.c * (model.beta + x) / Rational(x + 1);
  }
  const BigFloat r = model.residual(psi, E);
  if (r > model.residualBound())
    throw std::runtime_error("seed at E=" + toString(E) + " has residual " + r.str(6));
  return psi;
}

bool checkDefiniteSign(const GridFn<BigFloat>& psi) {
  if (psi.empty()) return false;
  const int s = psi.values.front().sign();
  if (s == 0) return false;
  return std::all_of(psi.values.begin(), psi.values.end(), [s](const BigFloat& v) { return v.sign() == s; });
}

std::vector<RdqmSeed> makeSeeds(const RdqmModel& model, const std::vector<Rational>& virtualEnergies,
                                const std::vector<long>& dE) {
  std::vector<RdqmSeed> seeds;
  for (std::size_t i = 0; i < virtualEnergies.size(); ++i) {
    const Rational& e = virtualEnergies[i];
    if (sgn(e) >= 0) throw std::invalid_argument("virtual seed energy " + toString(e) + " is not negative");
    if (i && !(e < virtualEnergies[i - 1]))
      throw std::invalid_argument("virtual seed energies must decrease strictly in label order");
    RdqmSeed s;
    s.label = static_cast<long>(i);
    s.energy = e;
    s.values = solveSeedAtEnergy(model, e);
    if (!checkDefiniteSign(s.values))
      throw SignViolation("virtual seed at E=" + toString(e) + " changes sign on the window");
    seeds.push_back(std::move(s));
  }
  std::vector<long> seen;
  for (long e : dE) {
    if (e < 0 || e > model.nMax) throw std::invalid_argument("eigen seed " + std::to_string(e) + " outside 0..nMax");
    if (std::find(seen.begin(), seen.end(), e) != seen.end())
      throw std::invalid_argument("repeated eigen seed " + std::to_string(e));
    seen.push_back(e);
    RdqmSeed s;
    s.eigen = true;
    s.label = e;
    s.energy = Rational(e);
    s.values = model.phi[static_cast<std::size_t>(e)];
    seeds.push_back(std::move(s));
  }
  return seeds;
}

std::vector<Rational> seedEnergies(const std::vector<RdqmSeed>& seeds) {
  std::vector<Rational> e;
  for (const auto& s : seeds) e.push_back(s.energy);
  return e;
}

long lowestKept(const std::vector<RdqmSeed>& seeds) {
  long n = 0;
  while (std::any_of(seeds.begin(), seeds.end(), [n](const RdqmSeed& s) { return s.eigen && s.label == n; })) ++n;
  return n;
}

int signFactor(const std::vector<Rational>& energies) {
  int s = 1;
  for (std::size_t i = 0; i < energies.size(); ++i)
    for (std::size_t j = i + 1; j < energies.size(); ++j) s *= sgnInt(energies[i] - energies[j]);
  return s;
}

GridFn<BigFloat> seedCasoratian(const RdqmModel& model, const std::vector<RdqmSeed>& seeds,
                                const GridFn<BigFloat>* extra) {
  std::vector<GridFn<BigFloat>> fs = seedValues(seeds, seeds.size());
  if (extra) fs.push_back(*extra);
  return casOf(model, fs);
}

DeformedPotentials deformedPotentialsBD(const RdqmModel& model, const std::vector<RdqmSeed>& seeds) {
  const long M = static_cast<long>(seeds.size());
  const long mu = lowestKept(seeds);
  if (mu > model.nMax) throw std::invalid_argument("lowest kept state beyond nMax");
  const GridFn<BigFloat> W = seedCasoratian(model, seeds);
  const GridFn<BigFloat> Wmu = seedCasoratian(model, seeds, &model.phi[static_cast<std::size_t>(mu)]);
  const long last = model.xMax - M - 1;
  if (last < 1) throw WindowError("window too small for the deformed potentials");
  DeformedPotentials p;
  for (long x = 0; x <= last; ++x) {
    if (W.at(x).isZero() || W.at(x + 1).isZero() || Wmu.at(x).isZero())
      throw SingularDeformation("Casoratian vanishes near x=" + std::to_string(x));
    BigFloat b = model.hop.at(static_cast<std::size_t>(x + M)) * W.at(x) / W.at(x + 1) * Wmu.at(x + 1) / Wmu.at(x);
    BigFloat d(0, model.precisionBits);
    if (x > 0) d = model.hop.at(static_cast<std::size_t>(x - 1)) * W.at(x + 1) / W.at(x) * Wmu.at(x - 1) / Wmu.at(x);
    if (p.positive && (b.sign() <= 0 || (x > 0 && d.sign() <= 0))) {
      p.positive = false;
      p.status = "non-positive potential at x=" + std::to_string(x);
    }
    p.B.values.push_back(std::move(b));
    p.D.values.push_back(std::move(d));
  }
  if (p.positive) p.status = "B_D > 0 and D_D > 0 (x >= 1) on {0.." + std::to_string(last) + "}";
  return p;
}

GridFn<BigFloat> deformedEigenfunctions(const RdqmModel& model, const std::vector<RdqmSeed>& seeds, long n,
                                        const Faults& faults) {
  if (n < 0 || n > model.nMax) throw std::invalid_argument("state " + std::to_string(n) + " outside 0..nMax");
  for (const auto& s : seeds)
    if (s.eigen && s.label == n) throw std::invalid_argument("state " + std::to_string(n) + " is a seed");
  const long M = static_cast<long>(seeds.size());
  int eps = signFactor(seedEnergies(seeds)) * (M % 2 ? -1 : 1);
  if (faults.flipEpsilon) eps = -eps;
  const GridFn<BigFloat> W = seedCasoratian(model, seeds);
  const GridFn<BigFloat> Wn = seedCasoratian(model, seeds, &model.phi[static_cast<std::size_t>(n)]);
  GridFn<BigFloat> out;
  out.energy = BigFloat(n, model.precisionBits);
  const long last = std::min(Wn.xMax(), W.xMax() - 1);
  for (long x = 0; x <= last; ++x) {
    const BigFloat rad = W.at(x) * W.at(x + 1);
    if (rad.sign() <= 0) throw SignViolation("W_C[seeds](x) W_C[seeds](x+1) <= 0 at x=" + std::to_string(x));
    BigFloat v = quarterBD(model, x, M) * Wn.at(x) / rad.sqrt();
    out.values.push_back(eps < 0 ? -v : v);
  }
  return out;
}

BigFloat deformedResidual(const RdqmModel& model, const std::vector<RdqmSeed>& seeds, long n) {
  const GridFn<BigFloat> phi = deformedEigenfunctions(model, seeds, n);
  const DeformedPotentials p = deformedPotentialsBD(model, seeds);
  const BigFloat Emu(lowestKept(seeds), model.precisionBits);
  const BigFloat En(n, model.precisionBits);
  const long last = std::min(phi.xMax() - 1, p.B.xMax() - 1);
  BigFloat worst(0, model.precisionBits), norm(0, model.precisionBits);
  for (long x = 0; x <= last + 1; ++x) norm = maxOf(norm, phi.at(x).abs());
  for (long x = 0; x <= last; ++x) {
    BigFloat h = (p.B.at(x) + p.D.at(x) + Emu - En) * phi.at(x) - (p.B.at(x) * p.D.at(x + 1)).sqrt() * phi.at(x + 1);
    if (x > 0) h -= (p.B.at(x - 1) * p.D.at(x)).sqrt() * phi.at(x - 1);
    worst = maxOf(worst, h.abs());
  }
  return worst / norm;
}

SymTridiagonal deformedHamiltonian(const RdqmModel& model, const std::vector<RdqmSeed>& seeds, long N) {
  const DeformedPotentials p = deformedPotentialsBD(model, seeds);
  if (N > p.B.xMax()) throw WindowError("truncation N=" + std::to_string(N) + " exceeds the deformed window");
  if (!p.positive) throw SignViolation(p.status);
  const BigFloat Emu(lowestKept(seeds), model.precisionBits);
  SymTridiagonal t;
  for (long x = 0; x < N; ++x) {
    t.diag.push_back(p.B.at(x) + p.D.at(x) + Emu);
    if (x + 1 < N) t.off.push_back(-(p.B.at(x) * p.D.at(x + 1)).sqrt());
  }
  return t;
}

bool signConjectureCheck(const RdqmModel& model, const std::vector<RdqmSeed>& seeds) {
  const int eps = signFactor(seedEnergies(seeds));
  const GridFn<BigFloat> W = seedCasoratian(model, seeds);
  return std::all_of(W.values.begin(), W.values.end(), [eps](const BigFloat& v) { return v.sign() == eps; });
}

namespace {

using K = GridFactor::Kind;

RadicalProduct factor(K kind, long level, long shift, const Rational& e) {
  return RadicalProduct::of(GridFactor{kind, level, shift}, e);
}

// (prod_{j=1}^s B(x+j-1) D(x+j))^{1/4} / sqrt(W_s(x) W_s(x+1))
RadicalProduct levelRadical(long s) {
  RadicalProduct r;
  for (long j = 1; j <= s; ++j) {
    r *= factor(K::B, 0, j - 1, Rational(1, 4));
    r *= factor(K::D, 0, j, Rational(1, 4));
  }
  r *= factor(K::Cas, s, 0, Rational(-1, 2));
  r *= factor(K::Cas, s, 1, Rational(-1, 2));
  return r;
}

struct ChainGrids {
  std::vector<GridFn<BigFloat>> W;   // W[k]: first k seeds
  std::vector<GridFn<BigFloat>> WN;  // WN[k]: first k seeds and phi_n
};

ChainGrids chainGrids(const RdqmModel& model, const std::vector<RdqmSeed>& seeds, long n, long upTo) {
  ChainGrids g;
  for (long k = 0; k <= upTo; ++k) {
    std::vector<GridFn<BigFloat>> fs = seedValues(seeds, static_cast<std::size_t>(k));
    g.W.push_back(casOf(model, fs));
    fs.push_back(model.phi.at(static_cast<std::size_t>(n)));
    g.WN.push_back(casOf(model, fs));
  }
  return g;
}

struct StepOutcome {
  GridFn<BigFloat> Q;
  BigFloat maxDev;
  long worstX = 0;
  bool assumptionHolds = true;
  std::string q1, q2;
};

// Q_{s+1}(x) = q1(x) Q_s(x) + q2(x) Q_s(x+1), q_i = term_i / R_{s+1}
StepOutcome replayStep(const RdqmModel& model, const std::vector<RdqmSeed>& seeds, const ChainGrids& g, long s,
                       const GridFn<BigFloat>& Qs, const Faults& faults) {
  RadicalProduct Bhat = factor(K::B, 0, s, Rational(1, 2)) * factor(K::D, 0, s + 1, Rational(1, 2)) *
                        factor(K::Cas, s, 0, 1) / factor(K::Cas, s, 1, 1) * factor(K::Cas, s + 1, 1, 1) /
                        factor(K::Cas, s + 1, 0, 1);
  RadicalProduct DhatNext = factor(K::B, 0, 0, Rational(1, 2)) * factor(K::D, 0, 1, Rational(1, 2)) *
                            factor(K::Cas, s, 2, 1) / factor(K::Cas, s, 1, 1) * factor(K::Cas, s + 1, 0, 1) /
                            factor(K::Cas, s + 1, 1, 1);
  const RadicalProduct Rs = levelRadical(s);
  const RadicalProduct target = levelRadical(s + 1);
  const RadicalProduct q1 = Bhat.sqrt() * Rs / target;
  const RadicalProduct q2 = -(DhatNext.sqrt() * Rs.shifted(1)) / target;
  if (!q1.integral() || !q2.integral()) throw std::logic_error("radicals left after dividing by the closed form");

  const long prec = model.precisionBits;
  auto value = [&](const GridFactor& f, long x) -> BigFloat {
    switch (f.kind) {
      case K::B: return model.B(x + f.shift);
      case K::D: return model.D(x + f.shift);
      case K::Cas: return g.W.at(static_cast<std::size_t>(f.level)).at(x + f.shift);
      case K::CasN: return g.WN.at(static_cast<std::size_t>(f.level)).at(x + f.shift);
    }
    return BigFloat(1, prec);
  };

  StepOutcome out;
  out.q1 = q1.str();
  out.q2 = q2.str();
  const std::vector<Rational> E = seedEnergies(seeds);
  for (long k : {s, s + 1}) {
    const int eps = signFactor(std::vector<Rational>(E.begin(), E.begin() + k));
    for (long x : {0L, 1L})
      if (g.W[static_cast<std::size_t>(k)].at(x).sign() != eps) out.assumptionHolds = false;
  }
  int epsNext = signFactor(std::vector<Rational>(E.begin(), E.begin() + s + 1)) * ((s + 1) % 2 ? -1 : 1);
  if (faults.flipEpsilon) epsNext = -epsNext;

  const long last = std::min(Qs.xMax() - 1, g.WN[static_cast<std::size_t>(s + 1)].xMax());
  out.maxDev = BigFloat(0, prec);
  for (long x = 0; x <= last; ++x) {
    BigFloat v = q1.evaluate(x, value, prec) * Qs.at(x) + q2.evaluate(x, value, prec) * Qs.at(x + 1);
    BigFloat closed = g.WN[static_cast<std::size_t>(s + 1)].at(x);
    if (epsNext < 0) closed = -closed;
    const BigFloat d = relDev(v, closed);
    if (d > out.maxDev) {
      out.maxDev = d;
      out.worstX = x;
    }
    out.Q.values.push_back(std::move(v));
  }
  return out;
}

GridFn<BigFloat> closedQ(const ChainGrids& g, const std::vector<RdqmSeed>& seeds, long s) {
  GridFn<BigFloat> Q = g.WN[static_cast<std::size_t>(s)];
  const std::vector<Rational> E = seedEnergies(seeds);
  const int eps = signFactor(std::vector<Rational>(E.begin(), E.begin() + s)) * (s % 2 ? -1 : 1);
  if (eps < 0)
    for (auto& v : Q.values) v = -v;
  return Q;
}

Json seedJson(const std::vector<RdqmSeed>& seeds) {
  Json a = Json::array();
  for (const auto& s : seeds)
    a.push_back({{"kind", s.eigen ? "eigen" : "virtual"}, {"label", s.label}, {"energy", toString(s.energy)}});
  return a;
}

CheckReport replayReport(const std::string& id, const RdqmModel& model, const std::vector<RdqmSeed>& seeds, long n,
                         const Faults& faults) {
  CheckReport r;
  r.identityId = id;
  r.params = {{"beta", toString(model.beta)},
              {"c", toString(model.c)},
              {"precision", model.precisionBits},
              {"window", model.xMax},
              {"seeds", seedJson(seeds)},
              {"n", n},
              {"faults", toJson(faults)}};
  return r;
}

BigFloat replayTolerance(const RdqmModel& model) { return BigFloat(1, model.precisionBits) / tenTo(25, model.precisionBits); }

}  // namespace

CheckReport darbouxStepReplay(const RdqmModel& model, const std::vector<RdqmSeed>& seeds, long s, long n,
                              const Faults& faults) {
  const auto t0 = Clock::now();
  CheckReport r = replayReport("rdqm.stepReplay", model, seeds, n, faults);
  r.params["s"] = s;
  try {
    if (s < 0 || s + 1 > static_cast<long>(seeds.size())) throw std::invalid_argument("step index out of range");
    const ChainGrids g = chainGrids(model, seeds, n, s + 1);
    const StepOutcome o = replayStep(model, seeds, g, s, closedQ(g, seeds, s), faults);
    r.lhs = o.q1;
    r.rhs = o.q2;
    r.params["maxRelDeviation"] = o.maxDev.str(6);
    r.params["worstX"] = o.worstX;
    r.params["assumptionHolds"] = o.assumptionHolds;
    if (!o.assumptionHolds) {
      r.verdict = Verdict::Inconclusive;
      r.message = "sgn W_C != eps at x in {0,1}";
    } else if (o.maxDev <= replayTolerance(model)) {
      r.verdict = Verdict::Pass;
    } else {
      r.verdict = Verdict::Fail;
      r.message = "replayed step differs from the closed form at x=" + std::to_string(o.worstX);
    }
  } catch (const std::exception& e) {
    r.verdict = Verdict::Error;
    r.message = e.what();
  }
  if (!r.passed()) r.witness = r.params;
  r.seconds = since(t0);
  return r;
}

CheckReport darbouxChainReplay(const RdqmModel& model, const std::vector<RdqmSeed>& seeds, long n,
                               const Faults& faults) {
  const auto t0 = Clock::now();
  CheckReport r = replayReport("rdqm.chainReplay", model, seeds, n, faults);
  try {
    const long M = static_cast<long>(seeds.size());
    const ChainGrids g = chainGrids(model, seeds, n, M);
    GridFn<BigFloat> Q = g.WN[0];
    Json steps = Json::array();
    bool assumption = true;
    BigFloat worst(0, model.precisionBits);
    for (long s = 0; s < M; ++s) {
      // the fault only touches the closed form of the final level
      Faults f = faults;
      if (s + 1 < M) f.flipEpsilon = false;
      StepOutcome o = replayStep(model, seeds, g, s, Q, f);
      steps.push_back({{"s", s}, {"maxRelDeviation", o.maxDev.str(6)}, {"q1", o.q1}, {"q2", o.q2}});
      assumption = assumption && o.assumptionHolds;
      worst = maxOf(worst, o.maxDev);
      Q = std::move(o.Q);
    }
    r.params["steps"] = steps;
    r.params["maxRelDeviation"] = worst.str(6);
    r.params["assumptionHolds"] = assumption;
    if (!assumption) {
      r.verdict = Verdict::Inconclusive;
      r.message = "sgn W_C != eps at x in {0,1} for some level";
    } else if (worst <= replayTolerance(model)) {
      r.verdict = Verdict::Pass;
    } else {
      r.verdict = Verdict::Fail;
      r.message = "replayed chain differs from the closed form";
    }
  } catch (const std::exception& e) {
    r.verdict = Verdict::Error;
    r.message = e.what();
  }
  if (!r.passed()) r.witness = r.params;
  r.seconds = since(t0);
  return r;
}

bool signIdentityHolds(const std::vector<Rational>& virtualEnergies, const std::vector<long>& dE) {
  std::vector<std::size_t> pv(virtualEnergies.size()), pe(dE.size());
  for (std::size_t i = 0; i < pv.size(); ++i) pv[i] = i;
  for (std::size_t i = 0; i < pe.size(); ++i) pe[i] = i;
  const long lm = static_cast<long>(pv.size() * pe.size());
  do {
    do {
      std::vector<Rational> ev, ee, all;
      for (auto i : pv) ev.push_back(virtualEnergies[i]);
      for (auto i : pe) ee.push_back(Rational(dE[i]));
      all = ev;
      all.insert(all.end(), ee.begin(), ee.end());
      if (signFactor(all) != (lm % 2 ? -1 : 1) * signFactor(ev) * signFactor(ee)) return false;
    } while (std::next_permutation(pe.begin(), pe.end()));
  } while (std::next_permutation(pv.begin(), pv.end()));
  return true;
}

CheckReport twoPathCompareRdQM(const RdqmModel& model, const std::vector<Rational>& virtualEnergies,
                               const std::vector<long>& dE, long n, long compareMax, const BigFloat& tolerance,
                               const Faults& faults) {
  const auto t0 = Clock::now();
  CheckReport r;
  r.identityId = "rdqm.twoPath";
  Json ev = Json::array();
  for (const auto& e : virtualEnergies) ev.push_back(toString(e));
  r.params = {{"beta", toString(model.beta)}, {"c", toString(model.c)},  {"precision", model.precisionBits},
              {"window", model.xMax},         {"dv", ev},                {"de", dE},
              {"n", n},                       {"compareMax", compareMax}, {"tolerance", tolerance.str(6)},
              {"faults", toJson(faults)}};
  try {
    const std::vector<RdqmSeed> all = makeSeeds(model, virtualEnergies, dE);
    const long l = static_cast<long>(virtualEnergies.size());
    const long m = static_cast<long>(dE.size());
    const std::vector<RdqmSeed> virt(all.begin(), all.begin() + l);
    const std::vector<RdqmSeed> eig(all.begin() + l, all.end());

    const GridFn<BigFloat> direct = deformedEigenfunctions(model, all, n, faults);

    // eigenfunctions of the virtual deformation
    std::vector<GridFn<BigFloat>> cols;
    for (const auto& s : eig) cols.push_back(deformedEigenfunctions(model, virt, s.label));
    const GridFn<BigFloat> phiVn = deformedEigenfunctions(model, virt, n);
    const DeformedPotentials pv = deformedPotentialsBD(model, virt);
    const GridFn<BigFloat> We = casoratianReal(cols, model.one(), pv.B.xMax());
    cols.push_back(phiVn);
    const GridFn<BigFloat> Wn = casoratianReal(cols, model.one(), pv.B.xMax());
    const int epsE = signFactor(seedEnergies(eig)) * (m % 2 ? -1 : 1);

    const long last = std::min({compareMax, direct.xMax(), pv.B.xMax() - m, Wn.xMax(), We.xMax() - 1});
    if (last < 0) throw WindowError("no common window for the two routes");
    BigFloat worst(0, model.precisionBits);
    long worstX = 0;
    for (long x = 0; x <= last; ++x) {
      BigFloat prod = model.one();
      for (long j = 1; j <= m; ++j) prod *= pv.B.at(x + j - 1) * pv.D.at(x + j);
      if (prod.sign() < 0) throw SignViolation("negative product of B_Dv D_Dv at x=" + std::to_string(x));
      const BigFloat rad = We.at(x) * We.at(x + 1);
      if (rad.sign() <= 0) throw SignViolation("nested Casoratian radicand <= 0 at x=" + std::to_string(x));
      BigFloat nested = prod.sqrt().sqrt() * Wn.at(x) / rad.sqrt();
      if (epsE < 0) nested = -nested;
      const BigFloat d = relDev(direct.at(x), nested);
      if (d > worst) {
        worst = d;
        worstX = x;
      }
    }
    const int epsD = signFactor(seedEnergies(all));
    const int epsDv = signFactor(seedEnergies(virt));
    const int epsDe = signFactor(seedEnergies(eig));
    const bool identity = epsD == ((l * m) % 2 ? -1 : 1) * epsDv * epsDe;
    const bool allOrders = signIdentityHolds(virtualEnergies, dE);
    r.params["maxRelDeviation"] = worst.str(6);
    r.params["worstX"] = worstX;
    r.params["comparedUpTo"] = last;
    r.params["epsD"] = epsD;
    r.params["epsDv"] = epsDv;
    r.params["epsDe"] = epsDe;
    r.params["signIdentity"] = identity;
    r.params["signIdentityAllOrders"] = allOrders;
    r.lhs = direct.at(0).str(30);
    r.rhs = "(x=0) nested route, max relative deviation " + worst.str(6);
    if (!identity || !allOrders) {
      r.verdict = Verdict::Fail;
      r.message = "sign identity fails";
    } else if (worst <= tolerance) {
      r.verdict = Verdict::Pass;
    } else {
      r.verdict = Verdict::Fail;
      r.message = "routes differ at x=" + std::to_string(worstX) + " by " + worst.str(6);
    }
  } catch (const std::exception& e) {
    r.verdict = Verdict::Error;
    r.message = e.what();
  }
  if (!r.passed()) r.witness = r.params;
  r.seconds = since(t0);
  return r;
}

CheckReport spectrumCheck(const RdqmModel& model, const std::vector<Rational>& virtualEnergies,
                          const std::vector<long>& dE, long N, long k, const BigFloat& tolerance,
                          const BigFloat& sensitivityTolerance) {
  const auto t0 = Clock::now();
  CheckReport r;
  r.identityId = "rdqm.spectrum";
  Json ev = Json::array();
  for (const auto& e : virtualEnergies) ev.push_back(toString(e));
  r.params = {{"beta", toString(model.beta)}, {"c", toString(model.c)}, {"precision", model.precisionBits},
              {"dv", ev},                     {"de", dE},               {"N", N},
              {"k", k},                       {"tolerance", tolerance.str(6)},
              {"sensitivityTolerance", sensitivityTolerance.str(6)}};
  try {
    const long M = static_cast<long>(virtualEnergies.size() + dE.size());
    const long needed = 2 * N + M + 1;
    long nMax = model.nMax;
    for (long e : dE) nMax = std::max(nMax, e + 1);
    const RdqmModel wide = model.xMax >= needed && nMax == model.nMax
                               ? model
                               : buildMeixnerModel(model.beta, model.c, nMax, std::max(model.xMax, needed),
                                                   model.precisionBits);
    r.params["window"] = wide.xMax;
    const std::vector<RdqmSeed> seeds = makeSeeds(wide, virtualEnergies, dE);
    const BigFloat tol = BigFloat(1, wide.precisionBits) / tenTo(40, wide.precisionBits);
    auto solve = [&](long size) { return lowestEigenvalues(deformedHamiltonian(wide, seeds, size), k, tol); };
    auto big = std::async(std::launch::async, solve, 2 * N);
    const std::vector<BigFloat> small = solve(N);
    const std::vector<BigFloat> large = big.get();

    std::vector<long> expected;
    for (long n = 0; static_cast<long>(expected.size()) < k; ++n)
      if (std::find(dE.begin(), dE.end(), n) == dE.end()) expected.push_back(n);
    BigFloat dev(0, wide.precisionBits), sens(0, wide.precisionBits);
    Json vals = Json::array();
    for (long i = 0; i < k; ++i) {
      dev = maxOf(dev, (small[i] - BigFloat(expected[i], wide.precisionBits)).abs());
      sens = maxOf(sens, (small[i] - large[i]).abs());
      vals.push_back(small[i].str(20));
    }
    r.params["eigenvalues"] = vals;
    r.params["expected"] = expected;
    r.params["maxDeviation"] = dev.str(6);
    r.params["truncationSensitivity"] = sens.str(6);
    r.lhs = vals.dump();
    r.rhs = Json(expected).dump();
    if (sens > sensitivityTolerance) {
      r.verdict = Verdict::Inconclusive;
      r.message = "truncation sensitivity " + sens.str(6) + " above threshold";
    } else if (dev <= tolerance) {
      r.verdict = Verdict::Pass;
    } else {
      r.verdict = Verdict::Fail;
      r.message = "eigenvalues deviate by " + dev.str(6);
    }
  } catch (const std::exception& e) {
    r.verdict = Verdict::Error;
    r.message = e.what();
  }
  if (!r.passed()) r.witness = r.params;
  r.seconds = since(t0);
  return r;
}

BigFloat factorizationDeviation(const RdqmModel& model, long N) {
  if (N + 1 > model.xMax) throw WindowError("factorization check needs a larger window");
  const long prec = model.precisionBits;
  // A = sqrt(B(x)) - e^{d} sqrt(D(x)): rows 0..N, columns 0..N
  Matrix<BigFloat> A(static_cast<std::size_t>(N + 1), std::vector<BigFloat>(static_cast<std::size_t>(N + 1), BigFloat(0, prec)));
  for (long x = 0; x <= N; ++x) {
    A[x][x] = model.B(x).sqrt();
    if (x + 1 <= N) A[x][x + 1] = -model.D(x + 1).sqrt();
  }
  BigFloat worst(0, prec);
  for (long x = 0; x < N; ++x)
    for (long y = 0; y < N; ++y) {
      BigFloat s(0, prec);
      for (long z = 0; z <= N; ++z) s += A[z][x] * A[z][y];
      BigFloat h(0, prec);
      if (x == y) h = model.B(x) + model.D(x);
      else if (y == x + 1) h = -model.hop[x];
      else if (y + 1 == x) h = -model.hop[y];
      worst = maxOf(worst, h.isZero() ? s.abs() : relDev(s, h));
    }
  return worst;
}

void writeGridCsv(std::ostream& out, const std::string& quantity, const GridFn<BigFloat>& f, long precisionBits) {
  out << "x," << quantity << " (" << precisionBits << " bits)\n";
  for (long x = 0; x <= f.xMax(); ++x) out << x << "," << f.at(x).str(40) << "\n";
}

}  // namespace casorati
