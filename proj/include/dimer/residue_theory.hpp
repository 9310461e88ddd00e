#ifndef DIMER_RESIDUE_THEORY_HPP
#define DIMER_RESIDUE_THEORY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dimer/bigint.hpp"

namespace dimer {

// Closed-form residue layer: exact values of U_n, G_n, H_n, the mod-64 and
// mod-32 congruence formulas for B_n, and verifiers that compare the
// formulas against exactly computed B_n tables.

struct LambdaSplit {
  unsigned n;
  bool odd;             // n = 2*lambda + (odd ? 1 : 0)
  unsigned long lambda;  // floor(n/2)
  unsigned long kappa;   // lambda = 8*kappa + theta
  unsigned theta;        // 0..7
};

LambdaSplit lambda_split(unsigned n);

// U_n = (-1)^(n/2) for even n, 1 for odd n.
BigInt u_closed(unsigned n);

// G_(2l) = G_(2l+1) = -C(l+1, 2).
BigInt g_closed(unsigned n);

// H_(2l) = -( l*C(l+1,3) + C(l+2,4) );  H_(2l+1) = -( (l+1)*C(l+2,3) + C(l+2,4) ).
BigInt h_closed(unsigned n);

// Predicted B_n mod 64. For even n the congruence carries a (-1)^lambda
// factor, which is multiplied through (it is its own inverse mod 64).
unsigned theorem_b_predict(unsigned n);

// Predicted B_n mod 2^r: (n+1) for even n, (-1)^((n-1)/2) * n for odd n.
// True for r <= 5, documented false from r = 6 on.
BigInt theorem_a_predict(unsigned n, unsigned r);

// The common value of B_(2l+1) and (-1)^theta * B_(2l) mod 32, computed both
// as the theta-split two-branch form and as the collapsed form
// (-1)^theta (2l+1); throws internal_mismatch if the two disagree.
unsigned mod32_reduce(unsigned long lambda);

enum class Verdict { match, mismatch, unevaluated };

struct ResidueClaim {
  unsigned n = 0;
  BigInt modulus;
  BigInt predicted;
  std::optional<BigInt> observed;
  Verdict verdict = Verdict::unevaluated;
};

using BnTable = std::map<unsigned, BigInt>;

struct VerifyReport {
  std::string check;
  bool expectation_met = false;
  std::string summary;
  std::vector<ResidueClaim> claims;
  std::vector<unsigned> mismatches;  // n values with verdict mismatch
};

// Theorem A scan over n = 1..max_n at modulus 2^r. Expectation: no
// mismatches for r <= 5; for r >= 6 the documented counterexamples
// {3, 5, 6} (clipped to range) must all be among the mismatches.
VerifyReport verify_theorem_a(const BnTable& bn, unsigned r, unsigned max_n);

// Theorem B scan over n = 1..max_n; expectation: zero mismatches.
VerifyReport verify_theorem_b(const BnTable& bn, unsigned max_n);

// Oddness of every B_n, n = 1..max_n.
VerifyReport verify_corollary_a(const BnTable& bn, unsigned max_n);

// B_(n+32) = B_n + 32 (mod 64) for n = 1..max_n (needs B up to max_n + 32).
VerifyReport verify_corollary_1(const BnTable& bn, unsigned max_n);

// (B_n mod 64) repeats with period 64 on 1..max_n, and period 32 fails.
VerifyReport verify_corollary_2(const BnTable& bn, unsigned max_n);

}  // namespace dimer

#endif  // DIMER_RESIDUE_THEORY_HPP
