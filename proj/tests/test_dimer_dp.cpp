#include <doctest.h>

#include "dimer/dimer_dp.hpp"
#include "oracles.hpp"

using dimer::BigInt;
using dimer::count_matchings;

TEST_CASE("known board counts") {
  CHECK(count_matchings(2, 2) == 2);
  CHECK(count_matchings(6, 6) == 6728);
  CHECK(count_matchings(8, 8) == 12988816);
  CHECK(count_matchings(3, 4) == 11);
  CHECK(count_matchings(5, 6) == 1183);
}

TEST_CASE("odd-area boards have no tiling") {
  CHECK(count_matchings(1, 1) == 0);
  CHECK(count_matchings(3, 3) == 0);
  CHECK(count_matchings(5, 5) == 0);
  CHECK(count_matchings(3, 5) == 0);
}

TEST_CASE("single row") {
  for (unsigned k = 1; k <= 15; ++k) {
    CHECK(count_matchings(1, 2 * k) == 1);
    CHECK(count_matchings(1, 2 * k - 1) == 0);
  }
}

TEST_CASE("two rows count like Fibonacci") {
  BigInt fib_prev(1), fib(1);  // F_1, F_2
  for (unsigned k = 1; k <= 30; ++k) {
    // count(2, k) = F_(k+1)
    CHECK(count_matchings(2, k) == fib);
    const BigInt next = fib + fib_prev;
    fib_prev = fib;
    fib = next;
  }
}

TEST_CASE("transpose symmetry") {
  for (unsigned r = 1; r <= 12; ++r) {
    for (unsigned c = r; c <= 12; ++c) {
      CHECK(count_matchings(r, c) == count_matchings(c, r));
    }
  }
}

TEST_CASE("agrees with the naive recursive enumerator") {
  dimer::testing::NaiveTilingCounter naive;
  for (unsigned n = 1; n <= 4; ++n) {
    CHECK(count_matchings(2 * n, 2 * n) == naive.count(2 * n, 2 * n));
  }
  const std::pair<unsigned, unsigned> boards[] = {{2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 6}, {6, 7}};
  for (auto [r, c] : boards) {
    CHECK(count_matchings(r, c) == naive.count(r, c));
  }
}

TEST_CASE("a_n") {
  CHECK(dimer::a_n(1) == 2);
  CHECK(dimer::a_n(2) == 36);
  const BigInt b5(89893);
  CHECK(dimer::a_n(5) == dimer::pow2(5) * b5 * b5);
  CHECK_THROWS_AS(dimer::a_n(0), dimer::error);
}

TEST_CASE("b_from_count") {
  CHECK(dimer::b_from_count(1) == 1);
  CHECK(dimer::b_from_count(3) == 29);
  CHECK(dimer::b_from_count(6) == 28793575);
}

TEST_CASE("count divisibility and squareness up to n = 8") {
  for (unsigned n = 1; n <= 8; ++n) {
    const BigInt a = dimer::a_n(n);
    const BigInt p2 = dimer::pow2(n);
    CHECK(dimer::mod_reduced(a, p2) == 0);
    CHECK(dimer::is_perfect_square(a / p2));
  }
}

TEST_CASE("width cap") {
  CHECK_THROWS_AS(count_matchings(30, 30), dimer::width_cap_exceeded);
  CHECK_THROWS_AS(count_matchings(6, 6, 4), dimer::width_cap_exceeded);
  CHECK(count_matchings(2, 30) == 1346269);  // wide boards run across the short side
  CHECK(count_matchings(2, 6, 2) == 13);
  CHECK_THROWS_AS(dimer::b_from_count(12), dimer::width_cap_exceeded);
}
