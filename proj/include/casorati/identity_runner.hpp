#pragma once

#include "casorati/identities.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace casorati {

struct SamplerConfig {
  long nMin = 0;
  long nMax = 3;
  long mMin = 1;
  long mMax = 3;
  int maxDegree = 5;
  long coefficientBound = 9;
  long trials = 200;
  std::uint64_t masterSeed = 42;
  std::size_t budgetBits = kDefaultBudgetBits;
  // gamma is drawn from this list for the imaginary-shift family
  std::vector<Rational> gammas = {Rational(1), Rational(1, 2), Rational(2)};
};

std::uint64_t splitmix64(std::uint64_t x);

// Bounded draws by modulo reduction so the stream is identical on every
// standard library.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  long uniform(long lo, long hi);
  bool oneIn(long k) { return uniform(0, k - 1) == 0; }

 private:
  std::mt19937_64 engine_;
};

// Sub-seed for trial t of one identity.
std::uint64_t trialSeed(std::uint64_t masterSeed, const std::string& identityId, long trial);

Rational randomRational(SeededRng& rng, long bound);
Poly randomPoly(SeededRng& rng, int maxDegree, long bound, bool complex);

// Deterministic instance for (identity, trial). Instances where a corollary
// denominator vanishes, or whose theorem / m=2 determinant is identically
// zero, are redrawn from the same stream.
IdentityInstance sampleInstance(const SamplerConfig& cfg, const std::string& identityId, long trial);

// Runs `trials` instances of each identity, fanning out over `threads`
// workers. Output is sorted by (identityId, trial).
std::vector<CheckReport> runIdentitySuite(const SamplerConfig& cfg, const std::vector<std::string>& ids,
                                          unsigned threads = 1);

// Runs prepared jobs in parallel and returns them in input order.
std::vector<CheckReport> runInstances(const std::vector<IdentityInstance>& jobs, unsigned threads);

void sortReports(std::vector<CheckReport>& reports);

}  // namespace casorati
