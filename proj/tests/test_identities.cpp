#include "casorati/identity_runner.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace casorati;
using oracle::poly;

namespace {
const Poly X = Poly::x();
}

TEST_CASE("quotient lemma examples") {
  CHECK(checkWronskianQuotient(ExpPoly(X * X), ExpPoly(X)).passed());
  CHECK(checkWronskianQuotient(ExpPoly(X), ExpPoly(X)).passed());
  CHECK(checkCasImagQuotient(X * X, X + Poly(1), Rational(1)).passed());
  CHECK(checkCasRealQuotient(X * X, X + Poly(1)).passed());
}

TEST_CASE("one-reduction examples") {
  CHECK(checkWronskianOneReduction(asExpPolys({X})).passed());
  CHECK(checkWronskianOneReduction(asExpPolys({X, X * X})).passed());
  CHECK(checkCasImagOneReduction({X, X * X}, Rational(1, 2)).passed());
  CHECK(checkCasRealOneReduction({X, X * X}).passed());
}

TEST_CASE("theorem examples") {
  CHECK(checkWronskianTheorem(asExpPolys({X}), asExpPolys({Poly(1), X * X})).passed());
  CHECK(checkWronskianTheorem({}, asExpPolys({Poly(1), X})).passed());
  CHECK(checkCasImagTheorem({X}, {Poly(1), X * X}, Rational(1)).passed());
  CHECK(checkCasImagTheorem({}, {X}, Rational(1)).passed());
  CHECK(checkCasRealTheorem({X}, {Poly(1), X * X}).passed());
  CHECK(checkCasImagCorollary({X}, {Poly(1), X * X}, Rational(1)).passed());
  CHECK(checkCasRealCorollary({X}, {Poly(1), X * X}).passed());
  CHECK(checkWronskianCorollary(asExpPolys({X}), asExpPolys({Poly(1), X * X})).passed());
}

TEST_CASE("m=2 identities match their direct forms") {
  const std::vector<Poly> fs = {X + Poly(2), X * X - Poly(3)};
  CHECK(checkEquationReal(fs, X.pow(3), poly({1, 1})).passed());
  CHECK(checkEquationImag(fs, X.pow(3), poly({1, 1}), Rational(1, 2)).passed());
  CHECK(checkEquationW(asExpPolys(fs), ExpPoly(X.pow(3)), ExpPoly(poly({1, 1}))).passed());
}

TEST_CASE("the x+1 shift of the real-shift m=2 identity is essential") {
  const std::vector<Poly> fs = {X + Poly(2), X * X - Poly(3)};
  Faults f;
  f.eq3Shift = 0;
  CHECK(checkEquationReal(fs, X.pow(3), poly({1, 1}), f).verdict == Verdict::Fail);
  f.eq3Shift = 2;
  CHECK(checkEquationReal(fs, X.pow(3), poly({1, 1}), f).verdict == Verdict::Fail);
}

TEST_CASE("binomial moment sums by direct summation") {
  CHECK(binomialMomentSum(1, 0) == Rational(1));
  CHECK(binomialMomentSum(2, 0) == Rational(0));
  CHECK(binomialMomentSum(2, 1) == Rational(-1));
  // (-1)^{j-1} (j-1)! at s = j-1, zero below
  long fact = 1;
  for (long j = 1; j <= 10; ++j) {
    if (j > 1) fact *= j - 1;
    for (long s = 0; s < j - 1; ++s) CHECK(binomialMomentSum(j, s) == Rational(0));
    CHECK(binomialMomentSum(j, j - 1) == Rational((j - 1) % 2 ? -fact : fact));
  }
  CHECK(checkSumFormula(10).passed());
}

TEST_CASE("classical limit examples") {
  CHECK(checkClassicalLimit({Poly(1), X}, Rational(1), 4).passed());
  CHECK(checkClassicalLimit({X, X * X}, Rational(1), 4).passed());
  CHECK(checkClassicalLimit({X, X * X, poly({1, 0, 0, 1})}, Rational(1), 4).passed());
}

TEST_CASE("every identity passes on seeded random instances") {
  SamplerConfig cfg;
  cfg.trials = 15;
  std::vector<std::string> ids = primaryIdentityIds();
  for (const auto& id : auxiliaryIdentityIds()) ids.push_back(id);
  CHECK(primaryIdentityIds().size() == 18);
  for (const auto& r : runIdentitySuite(cfg, ids, 2)) {
    INFO(r.identityId << " trial " << r.trial << ": " << r.message);
    CHECK(r.passed());
  }
}

TEST_CASE("sampling is deterministic and thread independent") {
  SamplerConfig cfg;
  cfg.trials = 6;
  const std::vector<std::string> ids = {"Wg.theorem", "Wc.corollary"};
  const auto a = runIdentitySuite(cfg, ids, 1);
  const auto b = runIdentitySuite(cfg, ids, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].identityId == b[i].identityId);
    CHECK(a[i].lhs == b[i].lhs);
    CHECK(toJson(sampleInstance(cfg, "Wg.theorem", 3)) == toJson(sampleInstance(cfg, "Wg.theorem", 3)));
  }
}

TEST_CASE("corrupted instances fail and their witnesses replay") {
  SamplerConfig cfg;
  for (const std::string id : {"W.theorem", "Wg.corollary", "Wc.nesting"}) {
    long failures = 0;
    for (long t = 0; t < 8; ++t) {
      IdentityInstance in = sampleInstance(cfg, id, t);
      in.faults.entry = EntryFault{0, 0, Gaussian(Rational(1, 3))};
      const CheckReport r = runInstance(in);
      if (r.passed()) continue;  // e.g. n = 0 leaves nothing to corrupt
      ++failures;
      REQUIRE(!r.witness.is_null());
      const CheckReport again = runInstance(instanceFromJson(r.witness));
      CHECK(again.verdict == r.verdict);
      CHECK(again.lhs == r.lhs);
      CHECK(again.rhs == r.rhs);
    }
    CHECK(failures > 0);
  }
}

TEST_CASE("budget guard reports an error") {
  IdentityInstance in;
  in.id = "Wc.theorem";
  in.fs = asExpPolys({X.pow(5) + Poly(Gaussian(makeRational(987654321, 123456789))), X.pow(4) - Poly(3)});
  in.us = asExpPolys({X.pow(3), X * X + Poly(Gaussian(Rational(7, 9))), X});
  in.budgetBits = 8;
  const CheckReport r = runInstance(in);
  CHECK(r.verdict == Verdict::Error);
}
