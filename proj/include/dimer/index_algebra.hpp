#ifndef DIMER_INDEX_ALGEBRA_HPP
#define DIMER_INDEX_ALGEBRA_HPP

namespace dimer {

// Index arithmetic for the symmetry rules w_(-k) = w_k = w_(2n+1-k). Every
// index orbit under k -> -k and k -> 2n+1-k (mod 2n+1) has a unique
// representative in [0, n]; normalize() computes it.

struct NormalizedIndex {
  unsigned n;
  unsigned k;  // in [0, n]
};

inline bool operator==(const NormalizedIndex& a, const NormalizedIndex& b) {
  return a.n == b.n && a.k == b.k;
}

NormalizedIndex normalize(long long k, unsigned n);

struct SignedIndex {
  int sign;  // +1 or -1
  NormalizedIndex idx;
};

// Rewrites u_k as sign * v_j with j normalized, using u_(2k) = v_k and
// u_(2k+1) = -v_(n-k).
SignedIndex u_to_v(long long k, unsigned n);

// Multiset identity between { (|k+j|, |k-j|) } and { (j, k) } over all
// unordered pairs 1 <= j < k <= n, indices normalized. Returns the verdict.
bool pair_identity_13(unsigned n);

}  // namespace dimer

#endif  // DIMER_INDEX_ALGEBRA_HPP
