#include "casorati/casoratian.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace casorati;
using oracle::poly;

namespace {

Matrix<Poly> randomPolyMatrix(SeededRng& rng, std::size_t n, int degree) {
  Matrix<Poly> m(n, std::vector<Poly>(n));
  for (auto& row : m)
    for (auto& e : row) e = randomPoly(rng, degree, 5, rng.oneIn(3));
  return m;
}

std::vector<Poly> randomList(SeededRng& rng, long n) {
  std::vector<Poly> fs;
  for (long k = 0; k < n; ++k) fs.push_back(randomPoly(rng, 4, 9, false));
  return fs;
}

}  // namespace

TEST_CASE("fraction-free determinant small cases") {
  const Poly x = Poly::x();
  CHECK(fractionFreeDet(Matrix<Poly>{{Poly(1)}}) == Poly(1));
  CHECK(fractionFreeDet(Matrix<Poly>{{x, Poly(1)}, {Poly(1), Poly()}}) == Poly(-1));
  CHECK(fractionFreeDet(Matrix<Poly>{}) == Poly(1));
  // zero pivot forces a row swap
  CHECK(fractionFreeDet(Matrix<Rational>{{0, 1, 2}, {1, 0, 3}, {4, -3, 8}}) == Rational(-2));
}

TEST_CASE("fraction-free determinant against cofactor expansion") {
  SeededRng rng(21);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int t = 0; t < (n <= 4 ? 10 : 3); ++t) {
      const Matrix<Poly> m = randomPolyMatrix(rng, n, n <= 4 ? 2 : 1);
      CHECK(fractionFreeDet(m) == oracle::cofactorDet(m, Poly(1)));
    }
  }
  for (int t = 0; t < 20; ++t) {
    Matrix<Rational> m(5, std::vector<Rational>(5));
    for (auto& row : m)
      for (auto& e : row) e = rng.oneIn(3) ? Rational(0) : randomRational(rng, 9);
    CHECK(fractionFreeDet(m) == oracle::cofactorDet(m, Rational(1)));
  }
}

TEST_CASE("numeric determinant matches exact") {
  SeededRng rng(22);
  Matrix<Rational> q(4, std::vector<Rational>(4));
  Matrix<BigFloat> f(4, std::vector<BigFloat>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      q[i][j] = randomRational(rng, 9);
      f[i][j] = BigFloat(q[i][j], 256);
    }
  const BigFloat exact(fractionFreeDet(q), 256);
  CHECK((numericDeterminant(f, 256) - exact).abs() <= BigFloat::fromString("1e-60", 256) * maxOf(exact.abs(), BigFloat(1, 256)));
}

TEST_CASE("wronskian examples") {
  const Poly x = Poly::x();
  CHECK(wronskianPoly({Poly(1), x}) == Poly(1));
  CHECK(wronskianPoly({x, x * x}) == x * x);
  CHECK(wronskianPoly({Poly(1), x, x * x}) == Poly(2));
  const ExpPoly up(Poly(1), Rational(1), Rational(0));
  const ExpPoly down(Poly(1), Rational(-1), Rational(0));
  const ExpPoly w = wronskian({up, down});
  CHECK(w.p == Poly(-2) * x);
  CHECK(sgn(w.a) == 0);
  CHECK(sgn(w.b) == 0);
  CHECK(wronskian({}).p == Poly(1));
}

TEST_CASE("imaginary-shift casoratian examples") {
  const Poly x = Poly::x();
  CHECK(casoratianImag({Poly(1), x}, Rational(1)) == Poly(1));
  CHECK(casoratianImag({x, x * x}, Rational(2)) == Poly(2) * x * x + Poly(2));
  const Poly f = poly({3, 0, -1});
  CHECK(casoratianImag({f}, Rational(1, 2)) == f);
  CHECK_THROWS_AS(casoratianImag({x}, Rational(0)), std::invalid_argument);
}

TEST_CASE("real-shift casoratian examples") {
  const Poly x = Poly::x();
  CHECK(casoratianReal({Poly(1), x}) == Poly(1));
  CHECK(casoratianReal({x, x * x}) == x * (x + Poly(1)));
  const Poly f = poly({3, 0, -1});
  CHECK(casoratianReal({f}) == f);
}

TEST_CASE("antisymmetry under swapping two functions") {
  SeededRng rng(23);
  for (int t = 0; t < 20; ++t) {
    auto fs = randomList(rng, 3);
    auto sw = fs;
    std::swap(sw[0], sw[2]);
    CHECK(casoratianReal(sw) == -casoratianReal(fs));
    CHECK(casoratianImag(sw, Rational(1, 2)) == -casoratianImag(fs, Rational(1, 2)));
    CHECK(wronskianPoly(sw) == -wronskianPoly(fs));
  }
}

TEST_CASE("linearity in one slot") {
  SeededRng rng(24);
  for (int t = 0; t < 20; ++t) {
    auto fs = randomList(rng, 3);
    const Poly g = randomPoly(rng, 4, 9, false);
    const Gaussian a = oracle::randomGaussian(rng, 5);
    const Gaussian b = oracle::randomGaussian(rng, 5);
    auto mixed = fs;
    auto other = fs;
    mixed[1] = a * fs[1] + b * g;
    other[1] = g;
    CHECK(casoratianReal(mixed) == a * casoratianReal(fs) + b * casoratianReal(other));
    CHECK(casoratianImag(mixed, Rational(1)) == a * casoratianImag(fs, Rational(1)) + b * casoratianImag(other, Rational(1)));
    CHECK(wronskianPoly(mixed) == a * wronskianPoly(fs) + b * wronskianPoly(other));
  }
}

TEST_CASE("imaginary-shift casoratian of real polynomials is real") {
  SeededRng rng(25);
  for (int t = 0; t < 30; ++t) {
    const long n = rng.uniform(1, 4);
    CHECK(casoratianImag(randomList(rng, n), Rational(1, 1 + rng.uniform(0, 2))).isReal());
  }
}

TEST_CASE("polynomial casoratian agrees with the grid casoratian") {
  SeededRng rng(26);
  for (int t = 0; t < 10; ++t) {
    const auto fs = randomList(rng, 3);
    std::vector<GridFn<Rational>> grid(fs.size());
    for (std::size_t k = 0; k < fs.size(); ++k)
      for (long x = 0; x <= 12; ++x) grid[k].values.push_back(fs[k](Gaussian(x)).re);
    const GridFn<Rational> g = casoratianReal(grid, Rational(1));
    const Poly w = casoratianReal(fs);
    REQUIRE(g.xMax() == 10);
    for (long x = 0; x <= g.xMax(); ++x) CHECK(g.at(x) == w(Gaussian(x)).re);
  }
}

TEST_CASE("grid casoratian needs enough points") {
  std::vector<GridFn<Rational>> fs(3);
  for (auto& f : fs) f.values = {Rational(1), Rational(2)};
  CHECK_THROWS_AS(casoratianReal(fs, Rational(1)), WindowError);
}

TEST_CASE("entry fault changes the determinant") {
  const Poly x = Poly::x();
  EntryFault f{0, 1, Gaussian(1)};
  CHECK(casoratianReal({Poly(1), x}, &f) != casoratianReal({Poly(1), x}));
}
