#ifndef DIMER_DIMER_DP_HPP
#define DIMER_DIMER_DP_HPP

#include "dimer/bigint.hpp"

namespace dimer {

// Memory for the profile DP is two layers of 2^cols big-integer
// accumulators, so the width is capped; 20 keeps the footprint desk-scale
// and can be raised explicitly by callers that know what they are doing.
inline constexpr unsigned kDefaultWidthCap = 20;

// Exact number of perfect matchings (domino tilings) of a rows x cols grid,
// by broken-profile dynamic programming over the cells. Odd-area boards
// return 0. The DP runs across the smaller board side; throws
// width_cap_exceeded when min(rows, cols) > width_cap.
BigInt count_matchings(unsigned rows, unsigned cols, unsigned width_cap = kDefaultWidthCap);

// A_n: matchings of the 2n x 2n grid.
BigInt a_n(unsigned n, unsigned width_cap = kDefaultWidthCap);

// B_n from the count: asserts 2^n | A_n and that the quotient is a perfect
// square, returns the positive root. Throws divisibility_failure or
// not_a_perfect_square on violation (either means the DP is wrong).
BigInt b_from_count(unsigned n, unsigned width_cap = kDefaultWidthCap);

}  // namespace dimer

#endif  // DIMER_DIMER_DP_HPP
