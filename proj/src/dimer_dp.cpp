#include "dimer/dimer_dp.hpp"

#include <string>
#include <vector>

namespace dimer {

BigInt count_matchings(unsigned rows, unsigned cols, unsigned width_cap) {
  if (rows == 0 || cols == 0) throw error("count_matchings: empty board");
  // Counts are transpose invariant; run the DP across the smaller side so
  // the 2^width state table stays as small as possible. The cap applies to
  // that effective width.
  if (cols > rows) std::swap(rows, cols);
  if (cols > width_cap) {
    throw width_cap_exceeded("board width " + std::to_string(cols) + " exceeds cap " +
                             std::to_string(width_cap));
  }
  if ((static_cast<unsigned long long>(rows) * cols) % 2 != 0) return BigInt(0);

  // Cell-at-a-time scan, row major. While standing on cell (r, c), bit j of
  // the profile covers the frontier cell in column j: row r for j >= c,
  // row r+1 for j < c. Bit c set means (r, c) is already covered by a
  // domino placed earlier.
  const std::size_t states = std::size_t(1) << cols;
  std::vector<BigInt> cur(states), next(states);
  cur[0] = 1;

  for (unsigned r = 0; r < rows; ++r) {
    for (unsigned c = 0; c < cols; ++c) {
      for (auto& v : next) {
        if (sgn(v) != 0) v = 0;
      }
      const std::size_t bit = std::size_t(1) << c;
      const std::size_t bit_right = bit << 1;
      for (std::size_t mask = 0; mask < states; ++mask) {
        const BigInt& cnt = cur[mask];
        if (sgn(cnt) == 0) continue;
        if (mask & bit) {
          // Already covered; the frontier just advances.
          next[mask ^ bit] += cnt;
          continue;
        }
        if (r + 1 < rows) next[mask | bit] += cnt;  // vertical, covers (r+1, c)
        if (c + 1 < cols && !(mask & bit_right)) {
          next[mask | bit_right] += cnt;  // horizontal, covers (r, c+1)
        }
      }
      cur.swap(next);
    }
  }
  return cur[0];
}

BigInt a_n(unsigned n, unsigned width_cap) {
  if (n == 0) throw error("a_n: n must be positive");
  return count_matchings(2 * n, 2 * n, width_cap);
}

BigInt b_from_count(unsigned n, unsigned width_cap) {
  const BigInt a = a_n(n, width_cap);
  const BigInt p2 = pow2(n);
  BigInt q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), p2.get_mpz_t());
  if (sgn(rem) != 0) {
    throw divisibility_failure("2^" + std::to_string(n) + " does not divide A_" +
                               std::to_string(n) + " = " + to_decimal(a));
  }
  return integer_sqrt_exact(q);
}

}  // namespace dimer
