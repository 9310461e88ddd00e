// Test-only reference implementations. Everything here is deliberately
// written along different lines than the library code it checks.
#ifndef DIMER_TESTS_ORACLES_HPP
#define DIMER_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "dimer/bigint.hpp"
#include "dimer/poly.hpp"

namespace dimer::testing {

// Tiling counter by first-empty-cell recursion, memoized on the occupancy
// window of the next `cols`+1 cells. Independent of the production
// broken-profile DP.
class NaiveTilingCounter {
 public:
  BigInt count(unsigned rows, unsigned cols) {
    rows_ = rows;
    cols_ = cols;
    memo_.clear();
    if ((static_cast<unsigned long long>(rows) * cols) % 2 != 0) return BigInt(0);
    return rec(0, 0);
  }

 private:
  unsigned rows_ = 0, cols_ = 0;
  std::map<std::pair<unsigned, std::uint64_t>, BigInt> memo_;

  BigInt rec(unsigned idx, std::uint64_t occ) {
    while (occ & 1) {
      occ >>= 1;
      ++idx;
    }
    const unsigned total = rows_ * cols_;
    if (idx == total) return BigInt(1);
    const auto key = std::make_pair(idx, occ);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const unsigned r = idx / cols_, c = idx % cols_;
    BigInt sum(0);
    if (c + 1 < cols_ && !((occ >> 1) & 1)) sum += rec(idx + 2, occ >> 2);
    if (r + 1 < rows_ && !((occ >> cols_) & 1)) {
      sum += rec(idx + 1, (occ | (std::uint64_t(1) << cols_)) >> 1);
    }
    memo_.emplace(key, sum);
    return sum;
  }
};

inline IntPoly poly_from_roots(const std::vector<long>& roots) {
  IntPoly p = IntPoly::constant(BigInt(1));
  for (long r : roots) p = p * IntPoly{-r, 1};
  return p;
}

inline std::vector<BigInt> direct_power_sums(const std::vector<long>& values, unsigned long K) {
  std::vector<BigInt> p(K + 1);
  p[0] = values.size();
  for (unsigned long k = 1; k <= K; ++k) {
    BigInt s(0);
    for (long v : values) {
      BigInt term;
      const BigInt base(v);
      mpz_pow_ui(term.get_mpz_t(), base.get_mpz_t(), k);
      s += term;
    }
    p[k] = s;
  }
  return p;
}

inline std::vector<long> pairwise_sums(const std::vector<long>& values) {
  std::vector<long> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) out.push_back(values[i] + values[j]);
  }
  return out;
}

// Coefficients e_0..e_m of prod (y + s_i), i.e. the elementary symmetric
// functions of the s_i, by direct expansion.
inline std::vector<BigInt> direct_elementary(const std::vector<long>& values) {
  std::vector<BigInt> e(values.size() + 1, BigInt(0));
  e[0] = 1;
  std::size_t used = 0;
  for (long s : values) {
    ++used;
    for (std::size_t j = used; j >= 1; --j) e[j] += BigInt(s) * e[j - 1];
  }
  return e;
}

inline std::mt19937_64 seeded_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline BigInt random_bigint_with_digits(std::mt19937_64& rng, unsigned digits) {
  std::uniform_int_distribution<int> first(1, 9), rest(0, 9);
  std::string s;
  s.push_back(static_cast<char>('0' + first(rng)));
  for (unsigned i = 1; i < digits; ++i) s.push_back(static_cast<char>('0' + rest(rng)));
  return from_decimal(s);
}

inline IntPoly random_poly(std::mt19937_64& rng, int degree, int coeff_bound) {
  std::uniform_int_distribution<long> dist(-coeff_bound, coeff_bound);
  std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = dist(rng);
  while (sgn(c.back()) == 0) c.back() = dist(rng);
  return IntPoly(std::move(c));
}

}  // namespace dimer::testing

#endif  // DIMER_TESTS_ORACLES_HPP
