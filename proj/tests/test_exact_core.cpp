#include "casorati/bigfloat.hpp"
#include "casorati/exp_poly.hpp"
#include "casorati/rational_fn.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace casorati;
using oracle::poly;

TEST_CASE("rational parsing") {
  CHECK(parseRational("1/3") == Rational(1, 3));
  CHECK(parseRational("-0.6") == Rational(-3, 5));
  CHECK(parseRational("-1.7") == Rational(-17, 10));
  CHECK(parseRational("2.5e-1") == Rational(1, 4));
  CHECK(parseRational("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(parseRational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parseRational("1/0"), std::invalid_argument);
  CHECK(toString(makeRational(-6, 4)) == "-3/2");
}

TEST_CASE("gaussian parsing round trip") {
  const Gaussian z(Rational(1, 2), Rational(-3));
  CHECK(Gaussian::parse(z.str()) == z);
  CHECK(Gaussian::parse("7") == Gaussian(7));
  CHECK(Gaussian::imagUnit() * Gaussian::imagUnit() == Gaussian(-1));
}

TEST_CASE("field laws on random gaussian triples") {
  SeededRng rng(11);
  for (int t = 0; t < 500; ++t) {
    const Gaussian a = oracle::randomGaussian(rng, 9);
    const Gaussian b = oracle::randomGaussian(rng, 9);
    const Gaussian c = oracle::randomGaussian(rng, 9);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!b.isZero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("poly shift examples") {
  const Poly x = Poly::x();
  CHECK(polyShift(x * x, Gaussian(0)) == x * x);
  CHECK(polyShift(x, Gaussian(Rational(0), Rational(1, 2))) == x + Poly(Gaussian(Rational(0), Rational(1, 2))));
  // (x+i)^2 = x^2 + 2i x - 1
  const Gaussian i = Gaussian::imagUnit();
  CHECK(polyShift(x * x, i) == x * x + Poly(Gaussian(2) * i) * x + Poly(-1));
}

TEST_CASE("poly shifts compose") {
  SeededRng rng(12);
  for (int t = 0; t < 100; ++t) {
    const Poly p = randomPoly(rng, 5, 9, true);
    const Gaussian d1 = oracle::randomGaussian(rng, 5);
    const Gaussian d2 = oracle::randomGaussian(rng, 5);
    CHECK(polyShift(polyShift(p, d1), d2) == polyShift(p, d1 + d2));
  }
}

TEST_CASE("poly evaluation agrees with horner by hand") {
  const Poly p = poly({1, -2, 0, 3});  // 3x^3 - 2x + 1
  CHECK(p(Gaussian(2)) == Gaussian(21));
  CHECK(p(Gaussian::imagUnit()) == Gaussian(Rational(1), Rational(-5)));
}

TEST_CASE("derivative examples") {
  const Poly x = Poly::x();
  CHECK(polyDerivative(x.pow(3)) == Poly(3) * x * x);
  CHECK(polyDerivative(Poly(7)).isZero());
  const ExpPoly g(Poly(1), Rational(-1), Rational(0));
  const ExpPoly dg = expPolyDerivative(g);
  CHECK(dg.p == -x);
  CHECK(dg.samePair(g));
}

TEST_CASE("exp-poly derivative against central differences") {
  SeededRng rng(13);
  const long prec = 128;
  const BigFloat h = BigFloat::fromString("1e-8", prec);
  const BigFloat two(2, prec);
  for (int t = 0; t < 10; ++t) {
    const ExpPoly f(randomPoly(rng, 4, 5, false), Rational(rng.uniform(-1, 1)), randomRational(rng, 3));
    const Rational x0 = randomRational(rng, 2);
    const BigFloat exact = expPolyDerivative(f).evaluate(x0, prec);
    // f(x0 +- h): evaluate by shifting the polynomial and the exponent exactly
    const Rational hq = Rational(1, 100000000);
    const BigFloat fd = (f.evaluate(x0 + hq, prec) - f.evaluate(x0 - hq, prec)) / (two * h);
    const BigFloat scale = maxOf(exact.abs(), BigFloat(1, prec));
    CHECK(((fd - exact).abs() / scale).toDouble() < 1e-6);
  }
}

TEST_CASE("rational function reduction examples") {
  const Poly x = Poly::x();
  const RationalFn a = rationalReduce(x * x - Poly(1), x - Poly(1));
  CHECK(a.num() == x + Poly(1));
  CHECK(a.den() == Poly(1));
  const RationalFn b = rationalReduce(Poly(2) * x, Poly(4));
  CHECK(b.num() == Poly(Gaussian(Rational(1, 2))) * x);
  CHECK(b.den() == Poly(1));
  CHECK(rationalReduce(Poly(), x).isZero());
  CHECK_THROWS(rationalReduce(x, Poly()));
}

TEST_CASE("rational function arithmetic is consistent with evaluation") {
  SeededRng rng(14);
  for (int t = 0; t < 50; ++t) {
    Poly d1 = randomPoly(rng, 2, 5, true);
    Poly d2 = randomPoly(rng, 2, 5, true);
    if (d1.isZero() || d2.isZero()) continue;
    const RationalFn f(randomPoly(rng, 3, 5, true), d1);
    const RationalFn g(randomPoly(rng, 3, 5, true), d2);
    const Gaussian at(makeRational(rng.uniform(-20, 20), 7), Rational(1, 3));
    if (f.den()(at).isZero() || g.den()(at).isZero()) continue;
    CHECK((f * g)(at) == f(at) * g(at));
    CHECK((f + g)(at) == f(at) + g(at));
    CHECK(f.den().lead().isOne());
  }
}

TEST_CASE("bigfloat basics") {
  const BigFloat two(2, 256);
  CHECK((two.sqrt() * two.sqrt() - two).abs() < BigFloat::fromString("1e-70", 256));
  CHECK_THROWS_AS((-two).sqrt(), std::domain_error);
  CHECK(BigFloat(Rational(1, 4), 64).toDouble() == 0.25);
  CHECK(BigFloat(Rational(10), 128).pow(-3).toDouble() == doctest::Approx(1e-3));
}
