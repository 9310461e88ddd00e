#include "dimer/index_algebra.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace dimer {

NormalizedIndex normalize(long long k, unsigned n) {
  const long long m = 2LL * n + 1;
  long long r = k % m;
  if (r < 0) r += m;
  const long long canon = std::min(r, m - r);
  return NormalizedIndex{n, static_cast<unsigned>(canon)};
}

SignedIndex u_to_v(long long k, unsigned n) {
  if (k % 2 == 0) {
    return SignedIndex{+1, normalize(k / 2, n)};
  }
  const long long j = (k - 1) / 2;  // k odd, so k-1 is even and this is exact
  return SignedIndex{-1, normalize(static_cast<long long>(n) - j, n)};
}

bool pair_identity_13(unsigned n) {
  std::map<std::pair<unsigned, unsigned>, long> counts;
  for (unsigned k = 2; k <= n; ++k) {
    for (unsigned j = 1; j < k; ++j) {
      const unsigned a = normalize(static_cast<long long>(k) + j, n).k;
      const unsigned b = normalize(static_cast<long long>(k) - j, n).k;
      ++counts[{std::min(a, b), std::max(a, b)}];
      --counts[{j, k}];
    }
  }
  return std::all_of(counts.begin(), counts.end(), [](const auto& kv) { return kv.second == 0; });
}

}  // namespace dimer
