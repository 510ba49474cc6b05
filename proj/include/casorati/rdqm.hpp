#pragma once

#include "casorati/casoratian.hpp"
#include "casorati/identities.hpp"
#include "casorati/radical_product.hpp"
#include "casorati/tridiagonal.hpp"

#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace casorati {

class SingularDeformation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
// a negative radicand under the real square root
class SignViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Semi-infinite Meixner chain:
//   B(x) = c(x+beta)/(1-c), D(x) = x/(1-c), E_n = n,
//   phi_n = phi_0 P_n, phi_0(x)^2 = c^x (beta)_x / x!,
//   P_n(x) = sum_k (-n)_k (-x)_k / ((beta)_k k!) (1 - 1/c)^k.
struct RdqmModel {
  Rational beta;
  Rational c;
  long nMax = 0;
  long xMax = 0;
  long precisionBits = kDefaultPrecisionBits;
  std::vector<GridFn<BigFloat>> phi;
  std::vector<BigFloat> hop;  // sqrt(B(x) D(x+1)), x = 0..xMax
  BigFloat worstResidual;     // over all eigenpairs at construction

  Rational Bq(long x) const;
  Rational Dq(long x) const;
  BigFloat B(long x) const { return BigFloat(Bq(x), precisionBits); }
  BigFloat D(long x) const { return BigFloat(Dq(x), precisionBits); }
  BigFloat one() const { return BigFloat(1, precisionBits); }
  // ||(H - E) psi||_inf / ||psi||_inf over x = 0..psi.xMax()-1
  BigFloat residual(const GridFn<BigFloat>& psi, const Rational& E) const;
  // 10^{-precisionBits/4}
  BigFloat residualBound() const;
};

// Builds the model and checks every eigenpair against the matrix action;
// throws std::runtime_error when a residual exceeds residualBound().
RdqmModel buildMeixnerModel(const Rational& beta, const Rational& c, long nMax, long xMax, long precisionBits);
Rational meixnerP(const Rational& beta, const Rational& c, long n, long x);

// psi(0) = 1 solution of H psi = E psi. The recurrence runs in the ground-state
// gauge psi = phi_0 p, where it is rational:
//   B(x)(p(x) - p(x+1)) + D(x)(p(x) - p(x-1)) = E p(x).
GridFn<BigFloat> solveSeedAtEnergy(const RdqmModel& model, const Rational& E);
std::vector<Rational> seedGauge(const RdqmModel& model, const Rational& E);
bool checkDefiniteSign(const GridFn<BigFloat>& psi);

struct RdqmSeed {
  bool eigen = false;
  long label = 0;
  Rational energy;
  GridFn<BigFloat> values;
};
// Virtual seeds (strictly decreasing negative energies) followed by eigen seeds.
std::vector<RdqmSeed> makeSeeds(const RdqmModel& model, const std::vector<Rational>& virtualEnergies,
                                const std::vector<long>& dE);
std::vector<Rational> seedEnergies(const std::vector<RdqmSeed>& seeds);
long lowestKept(const std::vector<RdqmSeed>& seeds);

// prod_{i<j} sgn(E_i - E_j); +1 for fewer than two energies
int signFactor(const std::vector<Rational>& energies);

// W_C of the seed values on the model window
GridFn<BigFloat> seedCasoratian(const RdqmModel& model, const std::vector<RdqmSeed>& seeds,
                                const GridFn<BigFloat>* extra = nullptr);

struct DeformedPotentials {
  GridFn<BigFloat> B;
  GridFn<BigFloat> D;
  bool positive = true;
  std::string status;
};
DeformedPotentials deformedPotentialsBD(const RdqmModel& model, const std::vector<RdqmSeed>& seeds);

// (-1)^M eps_D (prod B D)^{1/4} W_C[seeds, phi_n] / sqrt(W_C[seeds](x) W_C[seeds](x+1))
GridFn<BigFloat> deformedEigenfunctions(const RdqmModel& model, const std::vector<RdqmSeed>& seeds, long n,
                                        const Faults& faults = {});
// ||(H_D - E_n) phi_Dn||_inf / ||phi_Dn||_inf
BigFloat deformedResidual(const RdqmModel& model, const std::vector<RdqmSeed>& seeds, long n);
SymTridiagonal deformedHamiltonian(const RdqmModel& model, const std::vector<RdqmSeed>& seeds, long N);

// sgn W_C[seeds](x) == eps_D on the whole window
bool signConjectureCheck(const RdqmModel& model, const std::vector<RdqmSeed>& seeds);

// One step s -> s+1 of the Darboux chain, starting from the closed form at
// level s, carried out on symbolic radicals with the square-root rule.
CheckReport darbouxStepReplay(const RdqmModel& model, const std::vector<RdqmSeed>& seeds, long s, long n,
                              const Faults& faults = {});
// All M steps from phi_n, each step fed with the previous replayed values.
CheckReport darbouxChainReplay(const RdqmModel& model, const std::vector<RdqmSeed>& seeds, long n,
                               const Faults& faults = {});

// Direct deformation against virtual-then-eigen, plus the sign identity
// eps_D = (-1)^{lm} eps_Dv eps_De over all orderings within each group.
CheckReport twoPathCompareRdQM(const RdqmModel& model, const std::vector<Rational>& virtualEnergies,
                               const std::vector<long>& dE, long n, long compareMax, const BigFloat& tolerance,
                               const Faults& faults = {});
bool signIdentityHolds(const std::vector<Rational>& virtualEnergies, const std::vector<long>& dE);

// k lowest eigenvalues of the N x N truncation of H_D against {E_n : n not in
// dE}, and the same at 2N. The model is rebuilt on a wider window if needed.
CheckReport spectrumCheck(const RdqmModel& model, const std::vector<Rational>& virtualEnergies,
                          const std::vector<long>& dE, long N, long k, const BigFloat& tolerance,
                          const BigFloat& sensitivityTolerance);

// A^dagger A against the tri-diagonal H on an N x N truncation; returns the
// largest entrywise relative deviation.
BigFloat factorizationDeviation(const RdqmModel& model, long N);

void writeGridCsv(std::ostream& out, const std::string& quantity, const GridFn<BigFloat>& f, long precisionBits);

}  // namespace casorati
