#include "casorati/identity_runner.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace casorati {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

long SeededRng::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

std::uint64_t trialSeed(std::uint64_t masterSeed, const std::string& identityId, long trial) {
  // FNV-1a of the id keeps streams of different identities apart.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : identityId) h = (h ^ c) * 0x100000001b3ULL;
  return splitmix64(splitmix64(masterSeed) ^ splitmix64(h + static_cast<std::uint64_t>(trial)));
}

Rational randomRational(SeededRng& rng, long bound) {
  Rational q(rng.uniform(-bound, bound), rng.uniform(1, bound));
  q.canonicalize();
  return q;
}

Poly randomPoly(SeededRng& rng, int maxDegree, long bound, bool complex) {
  const int d = static_cast<int>(rng.uniform(0, maxDegree));
  std::vector<Gaussian> cs(static_cast<std::size_t>(d + 1));
  for (int k = 0; k <= d; ++k) {
    do {
      cs[k] = Gaussian(randomRational(rng, bound), complex ? randomRational(rng, bound) : Rational(0));
    } while (k == d && cs[k].isZero());
  }
  return Poly(std::move(cs));
}

namespace {

bool isFamily(const std::string& id, const char* prefix) { return id.rfind(prefix, 0) == 0; }

ExpPoly drawFunction(SeededRng& rng, const SamplerConfig& cfg, bool complex, bool withExponent) {
  ExpPoly f(randomPoly(rng, cfg.maxDegree, cfg.coefficientBound, complex));
  if (withExponent) {
    f.a = Rational(rng.uniform(-1, 1));
    f.b = Rational(rng.uniform(-1, 1));
  }
  return f;
}

std::vector<ExpPoly> drawList(SeededRng& rng, const SamplerConfig& cfg, long count, bool complex, bool exp) {
  std::vector<ExpPoly> out;
  for (long k = 0; k < count; ++k) out.push_back(drawFunction(rng, cfg, complex, exp));
  return out;
}

bool determinantVanishes(const std::string& id, const std::vector<ExpPoly>& fs, const Rational& gamma) {
  if (isFamily(id, "W.") || id == "eq.W") return wronskian(fs).isZero();
  if (isFamily(id, "Wg.") || id == "eq.Wg") return casoratianImag(polyParts(fs), gamma).isZero();
  return casoratianReal(polyParts(fs)).isZero();
}

// Corollary denominators must not vanish. Theorem and m=2 instances whose
// full list is linearly dependent reduce to 0 = 0 and are redrawn as well.
bool needsRedraw(const IdentityInstance& in) {
  if (in.id.find("corollary") != std::string::npos) return determinantVanishes(in.id, in.fs, in.gamma);
  if (in.id.find("theorem") != std::string::npos) {
    std::vector<ExpPoly> all = in.fs;
    all.insert(all.end(), in.us.begin(), in.us.end());
    return determinantVanishes(in.id, all, in.gamma);
  }
  if (isFamily(in.id, "eq.")) {
    std::vector<ExpPoly> all = in.fs;
    all.push_back(in.g);
    all.push_back(in.h);
    return determinantVanishes(in.id, all, in.gamma);
  }
  return false;
}

}  // namespace

IdentityInstance sampleInstance(const SamplerConfig& cfg, const std::string& id, long trial) {
  SeededRng rng(trialSeed(cfg.masterSeed, id, trial));
  for (int attempt = 0;; ++attempt) {
    IdentityInstance in;
    in.id = id;
    in.trial = trial;
    in.budgetBits = cfg.budgetBits;
    const bool wFamily = isFamily(id, "W.") || id == "eq.W";
    const bool gFamily = isFamily(id, "Wg.") || id == "eq.Wg";
    const bool complex = (wFamily || gFamily) && rng.oneIn(5);
    if (gFamily) in.gamma = cfg.gammas[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(cfg.gammas.size()) - 1))];
    const long n = rng.uniform(cfg.nMin, cfg.nMax);
    const long m = rng.uniform(cfg.mMin, cfg.mMax);
    if (id == "sumFormula") {
      in.jMax = 10;
      return in;
    }
    if (id == "classicalLimit") {
      in.fs = drawList(rng, cfg, 3, false, false);
      in.gamma = Rational(1);
      in.halvings = 4;
      return in;
    }
    if (id.find("quotient") != std::string::npos) {
      in.f = drawFunction(rng, cfg, complex, wFamily);
      in.g = drawFunction(rng, cfg, complex, wFamily);
    } else if (id.find("theorem") != std::string::npos || id.find("corollary") != std::string::npos) {
      in.fs = drawList(rng, cfg, n, complex, wFamily);
      in.us = drawList(rng, cfg, m, complex, wFamily);
    } else if (isFamily(id, "eq.")) {
      in.fs = drawList(rng, cfg, n, complex, wFamily);
      in.g = drawFunction(rng, cfg, complex, wFamily);
      in.h = drawFunction(rng, cfg, complex, wFamily);
    } else {
      in.fs = drawList(rng, cfg, n, complex, wFamily);
      in.g = drawFunction(rng, cfg, complex, wFamily);
    }
    if (attempt < 100 && needsRedraw(in)) continue;
    return in;
  }
}

std::vector<CheckReport> runInstances(const std::vector<IdentityInstance>& jobs, unsigned threads) {
  std::vector<CheckReport> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) out[i] = runInstance(jobs[i]);
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

void sortReports(std::vector<CheckReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
    if (a.identityId != b.identityId) return a.identityId < b.identityId;
    return a.trial < b.trial;
  });
}

std::vector<CheckReport> runIdentitySuite(const SamplerConfig& cfg, const std::vector<std::string>& ids,
                                          unsigned threads) {
  std::vector<IdentityInstance> jobs;
  for (const auto& id : ids) {
    const long trials = id == "sumFormula" ? 1 : cfg.trials;
    for (long t = 0; t < trials; ++t) jobs.push_back(sampleInstance(cfg, id, t));
  }
  auto reports = runInstances(jobs, threads);
  sortReports(reports);
  return reports;
}

}  // namespace casorati
