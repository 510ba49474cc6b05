#pragma once

#include "casorati/factored.hpp"
#include "casorati/identities.hpp"

#include <vector>

namespace casorati {

// f*(x): conjugated coefficients
RationalFn star(const RationalFn& f);

// cof * sqrt(rad)
struct RadicalRationalFn {
  RationalFn cof;
  RationalFn rad;
  RationalFn square() const { return cof * cof * rad; }
};

// Deformed potential after M Darboux steps with seeds psi:
//   sqrt(V(x - i M g/2) V*(x - i (M+2) g/2)) * W(x + i g/2)/W(x - i g/2)
//     * W[psi, phi_mu](x - i g)/W[psi, phi_mu](x)
RadicalRationalFn deformedPotentialVD(const RationalFn& V, const std::vector<Poly>& seeds, const Rational& gamma,
                                      const Poly& muState);

// prod_{j=0}^{k-1} (V(x + i(s/2 - j) g) V*(x - i(s/2 - j) g)) as a factored product
FactoredProduct potentialPairProduct(const FactoredProduct& V, const Rational& gamma, long s, long jFirst,
                                     long jLast);

// The prefactor of the nested deformed states equals the direct one
// (compared in eighth powers).
CheckReport checkPrefactorGG(const RationalFn& V, const Rational& gamma, long l, long m);
// prod V_Dv V_Dv* over m shifts against the closed form (compared squared).
CheckReport checkPotentialProductIdentity(const RationalFn& V, const std::vector<Poly>& seeds, const Rational& gamma,
                                          long m, const Poly& groundSeed);
// Deformed eigenfunction directly and via the virtual-then-eigen route. Exact
// equality of the L-th powers, then the relative sign at a real point against
// sgn prod_j F(x_j^{(m)}), F the Casoratian of the virtual seeds.
CheckReport twoPathCompareIdQM(const RationalFn& V, const std::vector<Poly>& dV, const std::vector<Poly>& dE,
                               const Poly& v, const Rational& gamma, const Poly& groundSeed,
                               const Faults& faults = {});

}  // namespace casorati
