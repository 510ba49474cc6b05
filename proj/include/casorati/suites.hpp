#pragma once

#include "casorati/idqm.hpp"
#include "casorati/identity_runner.hpp"
#include "casorati/oqm.hpp"
#include "casorati/rdqm.hpp"

#include <vector>

namespace casorati {

struct OqmConfig {
  std::vector<std::vector<long>> dvSets = {{}, {0}, {1}, {0, 1}};
  std::vector<long> de = {1, 2};
  std::vector<long> ns = {0, 3, 4};
  long censusMax = 10;
  Faults faults;
};
Json toJson(const OqmConfig& c);
// twoPath per (dV, n), census per dV
std::vector<CheckReport> runOqmSuite(const OqmConfig& cfg);
CheckReport censusReport(const OqmModel& model, const IndexSet& seeds, long nMax);

struct IdqmConfig {
  long trials = 50;
  std::uint64_t masterSeed = 42;
  std::vector<Rational> gammas = {Rational(1), Rational(1, 2)};
  long lMax = 2;
  long mMax = 2;
  int potentialDegree = 2;
  int seedDegree = 3;
  long coefficientBound = 9;
  Faults faults;
};
Json toJson(const IdqmConfig& c);

struct IdqmInstance {
  long trial = 0;
  RationalFn V;
  std::vector<Poly> dV;
  std::vector<Poly> dE;
  Poly v;
  Poly groundSeed;
  Rational gamma;
};
// Seeds are real with pairwise distinct degrees, so no Casoratian vanishes;
// V may be complex.
IdqmInstance sampleIdqmInstance(const IdqmConfig& cfg, long trial);
// the three idQM checks per trial, sorted by (id, trial)
std::vector<CheckReport> runIdqmSuite(const IdqmConfig& cfg, unsigned threads);

struct RdqmConfig {
  Rational beta = Rational(2);
  Rational c = Rational(1, 3);
  long precisionBits = kDefaultPrecisionBits;
  long window = 80;
  long truncation = 60;
  long nMax = 10;
  std::vector<Rational> dv = {Rational(-3, 5), Rational(-17, 10)};
  std::vector<long> de = {1, 2};
  std::vector<long> ns = {0, 3};
  long compareMax = 40;
  std::string tolerance = "1e-25";
  long spectrumCount = 5;
  std::string spectrumTolerance = "1e-8";
  std::string sensitivityTolerance = "1e-9";
  std::string modelTolerance = "1e-30";
  Faults faults;
};
Json toJson(const RdqmConfig& c);
RdqmModel buildModel(const RdqmConfig& c);
std::vector<CheckReport> runRdqmSuite(const RdqmConfig& cfg);

// Re-runs the check a witness describes. Witnesses carry their check id
// under "id".
CheckReport replayWitness(const Json& witness);

}  // namespace casorati
