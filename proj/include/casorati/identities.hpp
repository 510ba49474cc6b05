#pragma once

#include "casorati/casoratian.hpp"
#include "casorati/serialize.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace casorati {

enum class Verdict { Pass, Fail, Inconclusive, Error };
std::string verdictName(Verdict v);

struct CheckReport {
  std::string identityId;
  long trial = -1;
  Json params = Json::object();
  std::string lhs;
  std::string rhs;
  Verdict verdict = Verdict::Error;
  std::string message;
  Json witness;  // null unless the check did not pass
  double seconds = 0.0;

  bool passed() const { return verdict == Verdict::Pass; }
};

// Deliberate corruptions used by negative controls.
struct Faults {
  std::optional<EntryFault> entry;  // applied to the main left-hand determinant
  bool flipEpsilon = false;         // flips the sign factor wherever one enters
  long eq3Shift = 1;                // shift of the W_C[f](x+1) factor in the m=2 real-shift identity

  bool any() const { return entry.has_value() || flipEpsilon || eq3Shift != 1; }
};
Json toJson(const Faults& f);
Faults faultsFromJson(const Json& j);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kDefaultBudgetBits = 1000000;

// Every input a checker needs. Families that work on polynomials read only
// the polynomial parts.
struct IdentityInstance {
  std::string id;
  long trial = -1;
  std::vector<ExpPoly> fs;
  std::vector<ExpPoly> us;
  ExpPoly f;  // quotient lemmas: the numerator
  ExpPoly g;  // quotient, gauge and nesting: g; m=2 identities: g
  ExpPoly h;  // m=2 identities: h
  Rational gamma = Rational(1);
  long jMax = 10;
  long halvings = 4;
  Faults faults;
  std::size_t budgetBits = kDefaultBudgetBits;
};
Json toJson(const IdentityInstance& inst);
IdentityInstance instanceFromJson(const Json& j);

// The eighteen lemma/proposition/theorem/corollary checkers, three families.
const std::vector<std::string>& primaryIdentityIds();
// m=2 identities, the sum formula and the classical limit.
const std::vector<std::string>& auxiliaryIdentityIds();
bool isIdentityId(const std::string& id);

// Dispatches on inst.id. Never throws: budget overruns and evaluation errors
// come back as Verdict::Error.
CheckReport runInstance(const IdentityInstance& inst);

// Wronskian family
CheckReport checkWronskianQuotient(const ExpPoly& f, const ExpPoly& g, const Faults& faults = {});
CheckReport checkWronskianOneReduction(const std::vector<ExpPoly>& fs, const Faults& faults = {});
CheckReport checkWronskianGauge(const std::vector<ExpPoly>& fs, const ExpPoly& g, const Faults& faults = {});
CheckReport checkWronskianNesting(const std::vector<ExpPoly>& fs, const ExpPoly& g, const Faults& faults = {});
CheckReport checkWronskianTheorem(const std::vector<ExpPoly>& fs, const std::vector<ExpPoly>& us,
                                  const Faults& faults = {});
CheckReport checkWronskianCorollary(const std::vector<ExpPoly>& fs, const std::vector<ExpPoly>& us,
                                    const Faults& faults = {});

// Imaginary-shift family
CheckReport checkCasImagQuotient(const Poly& f, const Poly& g, const Rational& gamma, const Faults& faults = {});
CheckReport checkCasImagOneReduction(const std::vector<Poly>& fs, const Rational& gamma, const Faults& faults = {});
CheckReport checkCasImagGauge(const std::vector<Poly>& fs, const Poly& g, const Rational& gamma,
                              const Faults& faults = {});
CheckReport checkCasImagNesting(const std::vector<Poly>& fs, const Poly& g, const Rational& gamma,
                                const Faults& faults = {});
CheckReport checkCasImagTheorem(const std::vector<Poly>& fs, const std::vector<Poly>& us, const Rational& gamma,
                                const Faults& faults = {});
CheckReport checkCasImagCorollary(const std::vector<Poly>& fs, const std::vector<Poly>& us, const Rational& gamma,
                                  const Faults& faults = {});

// Real-shift family
CheckReport checkCasRealQuotient(const Poly& f, const Poly& g, const Faults& faults = {});
CheckReport checkCasRealOneReduction(const std::vector<Poly>& fs, const Faults& faults = {});
CheckReport checkCasRealGauge(const std::vector<Poly>& fs, const Poly& g, const Faults& faults = {});
CheckReport checkCasRealNesting(const std::vector<Poly>& fs, const Poly& g, const Faults& faults = {});
CheckReport checkCasRealTheorem(const std::vector<Poly>& fs, const std::vector<Poly>& us, const Faults& faults = {});
// Squared corollary plus the signed identity with the sign factor, the
// latter in fourth-power form and by numeric sign sampling.
CheckReport checkCasRealCorollary(const std::vector<Poly>& fs, const std::vector<Poly>& us, const Faults& faults = {});

// m=2 identities computed directly, and compared byte for byte with the
// theorem output for us = [g, h].
CheckReport checkEquationW(const std::vector<ExpPoly>& fs, const ExpPoly& g, const ExpPoly& h,
                           const Faults& faults = {});
CheckReport checkEquationImag(const std::vector<Poly>& fs, const Poly& g, const Poly& h, const Rational& gamma,
                              const Faults& faults = {});
CheckReport checkEquationReal(const std::vector<Poly>& fs, const Poly& g, const Poly& h, const Faults& faults = {});

CheckReport checkSumFormula(long jMax);
// gamma^{-n(n-1)/2} W_gamma -> W while gamma halves from gamma0.
CheckReport checkClassicalLimit(const std::vector<Poly>& fs, const Rational& gamma0, long halvings);

// sum_{r=0}^{j-1} (-1)^r C(j-1, r) (r - (j-1)/2)^s
Rational binomialMomentSum(long j, long s);

std::vector<Poly> polyParts(const std::vector<ExpPoly>& fs);
std::vector<ExpPoly> asExpPolys(const std::vector<Poly>& fs);

}  // namespace casorati
