#include <doctest.h>

#include "dimer/cheb.hpp"
#include "dimer/residue_theory.hpp"

using dimer::BigInt;
using dimer::IntPoly;

namespace {

// Rebuild S_n from the closed coefficients: S_n(x) = sum (-1)^nu s_nu x^(n-nu).
IntPoly s_from_closed(unsigned n) {
  const auto s = dimer::s_coeffs_closed(n);
  std::vector<BigInt> c(n + 1);
  for (unsigned nu = 0; nu <= n; ++nu) {
    c[n - nu] = (nu % 2 == 0) ? s[nu] : -s[nu];
  }
  return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("s_poly small cases") {
  CHECK(dimer::s_poly(0) == IntPoly{1});
  CHECK(dimer::s_poly(1) == IntPoly{1, 1});
  CHECK(dimer::s_poly(2) == IntPoly{-1, 1, 1});
  for (unsigned n = 0; n <= 60; ++n) {
    const IntPoly s = dimer::s_poly(n);
    CHECK(s.degree() == static_cast<int>(n));
    CHECK(s.is_monic());
  }
}

TEST_CASE("closed coefficients match the recurrence") {
  SUBCASE("n = 2 by hand") {
    const auto s = dimer::s_coeffs_closed(2);
    CHECK(s[0] == 1);
    CHECK(s[1] == -1);
    CHECK(s[2] == -1);
  }
  for (unsigned n = 0; n <= 100; ++n) {
    CHECK(s_from_closed(n) == dimer::s_poly(n));
  }
}

TEST_CASE("s_n parity values") {
  for (unsigned n = 0; n <= 40; ++n) {
    const auto s = dimer::s_coeffs_closed(n);
    if (n % 2 == 0) {
      CHECK(s[n] == ((n / 2) % 2 == 0 ? 1 : -1));
    } else {
      CHECK(s[n] == (((n + 1) / 2) % 2 == 0 ? 1 : -1));
    }
  }
}

TEST_CASE("recurrence residual from closed coefficients") {
  const IntPoly x = IntPoly::monomial(1);
  for (unsigned n = 1; n <= 100; ++n) {
    const IntPoly res = s_from_closed(n + 1) - x * s_from_closed(n) + s_from_closed(n - 1);
    CHECK(res.is_zero());
  }
}

TEST_CASE("reverse polynomial") {
  CHECK(dimer::reverse_poly(2) == IntPoly{-1, -1, 1});  // x^2 - x - 1

  SUBCASE("coefficient at k = 2 equals the closed G_n") {
    for (unsigned n = 2; n <= 30; ++n) {
      const IntPoly rev = dimer::reverse_poly(n);
      CHECK(rev.coeff(n - 2) == dimer::g_closed(n));
    }
  }

  SUBCASE("involution") {
    for (unsigned n = 1; n <= 10; ++n) {
      const IntPoly s = dimer::s_poly(n);
      CHECK(dimer::reverse_normalized(dimer::reverse_normalized(s)) == s);
    }
  }

  SUBCASE("rejects unsuitable inputs") {
    CHECK_THROWS_AS(dimer::reverse_normalized(IntPoly{3, 1}), dimer::error);
    CHECK_THROWS_AS(dimer::reverse_normalized(IntPoly{1, 2}), dimer::non_monic);
  }
}

TEST_CASE("p_poly closed form") {
  CHECK(dimer::p_poly(1) == IntPoly{-1, 1});
  CHECK(dimer::p_poly(2) == IntPoly{1, -3, 1});
  CHECK(dimer::p_poly(3) == IntPoly{-1, 6, -5, 1});
}

TEST_CASE("p_from_s matches p_poly") {
  CHECK(dimer::p_from_s(1) == IntPoly{-1, 1});
  CHECK(dimer::p_from_s(2) == IntPoly{1, -3, 1});
  for (unsigned n = 1; n <= 50; ++n) {
    CHECK(dimer::p_from_s(n) == dimer::p_poly(n));
  }
}

TEST_CASE("q_poly") {
  CHECK(dimer::q_poly(1) == IntPoly{-1, 1});
  CHECK(dimer::q_poly(2) == IntPoly{1, -7, 1});
  CHECK(dimer::q_poly(3) == IntPoly{-1, 26, -13, 1});
  for (unsigned n = 1; n <= 50; ++n) {
    const IntPoly q = dimer::q_poly(n);
    CHECK(q.degree() == static_cast<int>(n));
    CHECK(q.is_monic());
  }
}

TEST_CASE("constant terms have absolute value 1") {
  for (unsigned n = 1; n <= 50; ++n) {
    const BigInt expect(n % 2 == 0 ? 1 : -1);
    CHECK(dimer::p_poly(n).coeff(0) == expect);
    CHECK(dimer::q_poly(n).coeff(0) == expect);
  }
}

TEST_CASE("even_part rejects stray odd coefficients") {
  CHECK(dimer::even_part(IntPoly{1, 0, -3, 0, 1}) == IntPoly{1, -3, 1});
  CHECK_THROWS_AS(dimer::even_part(IntPoly{0, 0, 1, 1}), dimer::odd_coefficient_nonzero);
}

TEST_CASE("family bundle") {
  const auto fam = dimer::make_cheb_family(4);
  CHECK(fam.n == 4);
  CHECK(fam.s == dimer::s_poly(4));
  CHECK(fam.p == dimer::p_poly(4));
  CHECK(fam.q == dimer::q_poly(4));
}
