#include <doctest.h>

#include <algorithm>
#include <vector>

#include "dimer/index_algebra.hpp"

using dimer::normalize;
using dimer::u_to_v;

TEST_CASE("normalize examples") {
  CHECK(normalize(-2, 3).k == 2);
  CHECK(normalize(5, 3).k == 2);
  CHECK(normalize(7, 3).k == 0);
  CHECK(normalize(0, 5).k == 0);
  CHECK(normalize(3, 3).k == 3);
}

TEST_CASE("normalize is idempotent and constant on orbits") {
  for (unsigned n = 1; n <= 50; ++n) {
    const long long m = 2LL * n + 1;
    for (long long k = -10 * m; k <= 10 * m; ++k) {
      const unsigned c = normalize(k, n).k;
      CHECK(c <= n);
      CHECK(normalize(c, n).k == c);
      CHECK(normalize(-k, n).k == c);
      CHECK(normalize(m - k, n).k == c);
      CHECK(normalize(k + m, n).k == c);
    }
  }
}

TEST_CASE("u indices map onto v indices") {
  const auto a = u_to_v(2, 3);
  CHECK(a.sign == 1);
  CHECK(a.idx.k == 1);
  const auto b = u_to_v(3, 3);
  CHECK(b.sign == -1);
  CHECK(b.idx.k == 2);
}

TEST_CASE("squared u values cover the squared v values") {
  for (unsigned n = 1; n <= 50; ++n) {
    std::vector<unsigned> image;
    for (unsigned k = 1; k <= n; ++k) image.push_back(u_to_v(k, n).idx.k);
    std::sort(image.begin(), image.end());
    for (unsigned k = 1; k <= n; ++k) CHECK(image[k - 1] == k);
  }
}

TEST_CASE("pair multiset identity") {
  SUBCASE("n = 2 by hand") {
    // Single pair (1,2): indices 3 and 1 normalize to {2, 1}.
    CHECK(normalize(3, 2).k == 2);
    CHECK(normalize(1, 2).k == 1);
    CHECK(dimer::pair_identity_13(2));
  }
  for (unsigned n = 2; n <= 50; ++n) CHECK(dimer::pair_identity_13(n));
}

TEST_CASE("pair index sums and differences avoid the zero class") {
  for (unsigned n = 2; n <= 50; ++n) {
    for (unsigned k = 2; k <= n; ++k) {
      for (unsigned j = 1; j < k; ++j) {
        CHECK(normalize(static_cast<long long>(k) + j, n).k != 0);
        CHECK(normalize(static_cast<long long>(k) - j, n).k != 0);
      }
    }
  }
}
