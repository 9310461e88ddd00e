#include <doctest.h>

#include "dimer/poly.hpp"
#include "oracles.hpp"

using dimer::BigInt;
using dimer::IntPoly;

TEST_CASE("polynomial arithmetic basics") {
  const IntPoly xm1{-1, 1};   // x - 1
  const IntPoly xp1{1, 1};    // x + 1
  CHECK(xm1 * xp1 == IntPoly{-1, 0, 1});

  const IntPoly f{1, -3, 1};  // x^2 - 3x + 1
  CHECK(f.derivative() == IntPoly{-3, 2});

  // x -> x - 4 applied to x - 1
  CHECK(xm1.shifted(BigInt(-4)) == IntPoly{-5, 1});
  // Shift round trip
  CHECK(f.shifted(BigInt(7)).shifted(BigInt(-7)) == f);

  CHECK((xm1 + xp1) == IntPoly{0, 2});
  CHECK((xm1 - xm1).is_zero());
  CHECK(IntPoly{0, 0, 0}.is_zero());
  CHECK(IntPoly().degree() == -1);
  CHECK(f.negated_variable() == IntPoly{1, 3, 1});
}

TEST_CASE("polynomial evaluation") {
  CHECK(IntPoly{-1, 1}.eval(4) == 3);
  CHECK(IntPoly{1, -3, 1}.eval(0) == 1);
  const IntPoly s2{-1, 1, 1};  // x^2 + x - 1
  CHECK(s2.eval(1) == 1);
}

TEST_CASE("eval distributes over ring operations") {
  auto rng = dimer::testing::seeded_rng(0xd15ea5e);
  std::uniform_int_distribution<long> xs(-50, 50);
  for (int i = 0; i < 100; ++i) {
    const IntPoly a = dimer::testing::random_poly(rng, 1 + i % 6, 20);
    const IntPoly b = dimer::testing::random_poly(rng, 1 + (i / 2) % 5, 20);
    const BigInt x(xs(rng));
    CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
    CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
  }
}

TEST_CASE("resultant orientation") {
  // Locked convention: resultant(x-a, x-b) = b - a.
  CHECK(dimer::resultant(IntPoly{-1, 1}, IntPoly{-2, 1}) == 1);
  CHECK(dimer::resultant(IntPoly{-2, 1}, IntPoly{-1, 1}) == -1);
  // Against the derivative the magnitude is the quadratic discriminant and
  // the sign for degree 2 is negative.
  CHECK(dimer::resultant(IntPoly{1, -3, 1}, IntPoly{-3, 2}) == -5);
  CHECK(dimer::resultant(IntPoly{1, -7, 1}, IntPoly{-7, 2}) == -45);
  CHECK_THROWS_AS(dimer::resultant(IntPoly(), IntPoly{-1, 1}), dimer::zero_polynomial);
  CHECK_THROWS_AS(dimer::resultant(IntPoly{-1, 1}, IntPoly()), dimer::zero_polynomial);
}

TEST_CASE("resultant equals product of f over g's roots") {
  auto rng = dimer::testing::seeded_rng(42);
  std::uniform_int_distribution<long> root(-9, 9);
  std::uniform_int_distribution<int> deg(1, 6), nroots(1, 5);
  for (int iter = 0; iter < 200; ++iter) {
    const IntPoly f = dimer::testing::random_poly(rng, deg(rng), 9);
    std::vector<long> roots(static_cast<std::size_t>(nroots(rng)));
    for (auto& r : roots) r = root(rng);
    const IntPoly g = dimer::testing::poly_from_roots(roots);
    BigInt expect(1);
    for (long r : roots) expect *= f.eval(BigInt(r));
    CHECK(dimer::resultant(f, g) == expect);
  }
}

TEST_CASE("subresultant PRS agrees with Sylvester elimination") {
  auto rng = dimer::testing::seeded_rng(7);
  std::uniform_int_distribution<int> deg(1, 12);
  int zero_cases = 0;
  for (int iter = 0; iter < 500; ++iter) {
    IntPoly f = dimer::testing::random_poly(rng, deg(rng), 9);
    IntPoly g = dimer::testing::random_poly(rng, deg(rng), 9);
    if (iter % 10 == 0) {
      // Plant a common factor so the zero path is exercised too.
      const IntPoly c = dimer::testing::random_poly(rng, 1 + iter % 3, 5);
      f = f * c;
      g = g * c;
    }
    const BigInt prs = dimer::resultant(f, g);
    const BigInt syl = dimer::resultant_sylvester(f, g);
    CHECK(prs == syl);
    if (sgn(prs) == 0) ++zero_cases;
  }
  CHECK(zero_cases >= 40);
}

TEST_CASE("discriminant") {
  CHECK(dimer::discriminant(IntPoly{1, -3, 1}) == 5);
  CHECK(dimer::discriminant(IntPoly{1, -7, 1}) == 45);
  CHECK(dimer::discriminant(IntPoly{-1, 1}) == 1);
  CHECK(dimer::discriminant(IntPoly{1}) == 1);
  CHECK_THROWS_AS(dimer::discriminant(IntPoly{1, 2}), dimer::non_monic);
  CHECK_THROWS_AS(dimer::discriminant(IntPoly()), dimer::zero_polynomial);
}

TEST_CASE("quadratic discriminant is the squared root difference") {
  for (long r = -10; r <= 10; ++r) {
    for (long s = -10; s <= 10; ++s) {
      const IntPoly f = dimer::testing::poly_from_roots({r, s});
      const BigInt d(r - s);
      CHECK(dimer::discriminant(f) == d * d);
    }
  }
}

TEST_CASE("exact integer square root") {
  CHECK(dimer::integer_sqrt_exact(BigInt(9)) == 3);
  CHECK(dimer::integer_sqrt_exact(dimer::from_decimal("8080751449")) == 89893);
  CHECK(dimer::integer_sqrt_exact(BigInt(841)) == 29);
  CHECK(dimer::integer_sqrt_exact(BigInt(0)) == 0);
  CHECK_THROWS_AS(dimer::integer_sqrt_exact(BigInt(8)), dimer::not_a_perfect_square);
  CHECK_THROWS_AS(dimer::integer_sqrt_exact(BigInt(-4)), dimer::not_a_perfect_square);

  auto rng = dimer::testing::seeded_rng(1234);
  std::uniform_int_distribution<unsigned> digits(1, 200);
  for (int i = 0; i < 1000; ++i) {
    const BigInt s = dimer::testing::random_bigint_with_digits(rng, digits(rng));
    CHECK(dimer::integer_sqrt_exact(s * s) == s);
  }
}

TEST_CASE("perfect square detection") {
  CHECK(dimer::is_perfect_square(BigInt(0)));
  CHECK(dimer::is_perfect_square(BigInt(36)));
  CHECK_FALSE(dimer::is_perfect_square(BigInt(35)));
  CHECK_FALSE(dimer::is_perfect_square(BigInt(-9)));
}

TEST_CASE("polynomial printing") {
  CHECK(IntPoly{1, -3, 1}.str() == "x^2 - 3x + 1");
  CHECK(IntPoly().str() == "0");
  CHECK(IntPoly{-5}.str() == "-5");
}
