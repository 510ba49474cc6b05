#pragma once

#include "casorati/identities.hpp"

#include <set>
#include <vector>

namespace casorati {

// Seeds of a multi-step deformation: virtual labels first, then eigen labels.
// Energies are attached by the model the labels refer to.
struct IndexSet {
  std::vector<long> dV;
  std::vector<long> dE;

  long Mv() const { return static_cast<long>(dV.size()); }
  long Me() const { return static_cast<long>(dE.size()); }
  long M() const { return Mv() + Me(); }
  // lowest eigen label not in dE
  long mu() const;
  // throws std::invalid_argument on repeated labels or negative ones
  void validate() const;
};
Json toJson(const IndexSet& s);

// Harmonic oscillator shifted so the ground energy is 0:
//   U = x^2 - 1, phi_n = H_n(x) e^{-x^2/2}, E_n = 2n,
//   virtual psi_v = i^{-v} H_v(ix) e^{x^2/2}, E_v = -2v - 2.
struct OqmModel {
  Poly U;
  long nMax = 0;
  long vMax = 0;

  ExpPoly eigen(long n) const;
  Rational eigenEnergy(long n) const { return Rational(2 * n); }
  ExpPoly virtualState(long v) const;
  Rational virtualEnergy(long v) const { return Rational(-2 * v - 2); }
};

OqmModel buildHarmonicModel(long nMax, long vMax);
// physicists' Hermite polynomial
Poly hermite(long n);

// -phi'' + U phi == E phi, exactly
bool verifySchrodinger(const RationalFn& U, const ExpPolyRatio& phi, const Rational& E);

std::vector<ExpPoly> seedsFor(const OqmModel& model, const IndexSet& seeds);
// U - 2 (log W)''
RationalFn deformedPotential(const OqmModel& model, const IndexSet& seeds);
// W[seeds, phi_n] / W[seeds]; throws std::invalid_argument for n in dE
ExpPolyRatio deformedEigenfunction(const OqmModel& model, const IndexSet& seeds, long n,
                                   const EntryFault* fault = nullptr);
// W[phi_Dv e_1..e_m, phi_Dv n] / W[phi_Dv e_1..e_m] with phi_Dv k = W[dV, k]/W[dV]
ExpPolyRatio nestedEigenfunction(const OqmModel& model, const IndexSet& seeds, long n);

// Both routes must agree exactly and solve the deformed equation at E_n.
CheckReport twoPathCompare(const OqmModel& model, const IndexSet& seeds, long n, const Faults& faults = {});

// prod_{d in dE} (m - d) >= 0 for every m up to max(dE) + 1
bool kreinAdlerCheck(const std::vector<long>& dE);

struct DegreeCensus {
  std::vector<std::pair<long, long>> degrees;  // (n, deg P_{D,n})
  std::set<long> missing;
  long ell = 0;        // number of missing degrees
  bool prefix = false;  // missing == {0..ell-1}
};
enum class CensusPath { Direct, Nested };
// deg P_{D,n} = deg num + deg Xi - deg den, Xi the polynomial part of W[seeds]
DegreeCensus degreeCensus(const OqmModel& model, const IndexSet& seeds, long nMax, CensusPath path);
Json toJson(const DegreeCensus& c);

}  // namespace casorati
