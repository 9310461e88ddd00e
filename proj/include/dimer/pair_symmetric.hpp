#ifndef DIMER_PAIR_SYMMETRIC_HPP
#define DIMER_PAIR_SYMMETRIC_HPP

#include <tuple>
#include <vector>

#include "dimer/poly.hpp"

namespace dimer {

// h_poly(n) builds the monic polynomial of degree q = C(n,2)
//
//   h_n(x) = prod over unordered pairs (j,k) of (x - 4 + t_j + t_k)
//
// where t_1..t_n are the roots of p_poly(n), without ever touching a root:
// power sums of the t_i come from Newton's identities on P_n's coefficients,
// pair-sum power sums from a binomial convolution, and the elementary
// symmetric functions of the pair sums from Newton's identities again. All
// divisions along the way are exact and asserted.

struct PairSummary {
  unsigned n = 0;
  unsigned long q = 0;        // C(n,2)
  IntPoly h;                  // monic, degree q
  std::vector<BigInt> sigma;  // sigma[j] = coefficient of x^(q-j); sigma[0] = 1
  BigInt U, V, W;             // sigma_q, sigma_(q-1), sigma_(q-2); 0 outside 0..q
  BigInt G, H;                // V/U and W/U (U is +-1)
};

// Power sums p_0..p_K of the roots of monic f (p_0 = deg f), via Newton's
// identities extended past the degree.
std::vector<BigInt> power_sums_from_poly(const IntPoly& f, unsigned long K);

// From power sums p_0..p_K of n values t_i, the power sums
// pi_k = sum_{i<j} (t_i + t_j)^k for k = 0..K:
//   pi_k = ( sum_m C(k,m) p_m p_(k-m)  -  2^k p_k ) / 2.
// Throws halving_not_exact if the halving fails (it cannot on valid input).
std::vector<BigInt> pair_sum_power_sums(const std::vector<BigInt>& p, unsigned n, unsigned long K);

// Newton recovery of e_0..e_q from power sums pw_1..pw_q (pw[0] ignored
// except for sanity). Divisions by k must be exact; otherwise throws
// inexact_newton_division.
std::vector<BigInt> elementary_from_power_sums(const std::vector<BigInt>& pw, unsigned long q);

PairSummary h_poly(unsigned n);

// (U, V, W) = (sigma_q, sigma_(q-1), sigma_(q-2)). Throws unexpected_u when
// |U| != 1.
std::tuple<BigInt, BigInt, BigInt> uvw(const PairSummary& s);

// B_n = h_n(4); throws non_positive_b if the value is not positive.
BigInt b_from_h(const PairSummary& s);

// Monomial symmetric sum: the sum of all distinct monomials obtained by
// assigning the exponents to pairwise distinct entries of values, e.g.
// exponents {2,1} over (a,b,c) gives a^2 b + a^2 c + b^2 a + b^2 c + c^2 a
// + c^2 b. exponents must be nonempty, all positive, and no longer than
// values.
BigInt monomial_symmetric_sum(const std::vector<unsigned>& exponents,
                              const std::vector<BigInt>& values);

}  // namespace dimer

#endif  // DIMER_PAIR_SYMMETRIC_HPP
