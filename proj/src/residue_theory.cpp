#include "dimer/residue_theory.hpp"

#include <algorithm>

#include "dimer/errors.hpp"

namespace dimer {

LambdaSplit lambda_split(unsigned n) {
  LambdaSplit s;
  s.n = n;
  s.odd = (n % 2) != 0;
  s.lambda = n / 2;
  s.kappa = s.lambda / 8;
  s.theta = static_cast<unsigned>(s.lambda % 8);
  return s;
}

BigInt u_closed(unsigned n) {
  if (n % 2 == 1) return BigInt(1);
  return (n / 2) % 2 == 0 ? BigInt(1) : BigInt(-1);
}

BigInt g_closed(unsigned n) {
  const unsigned long l = n / 2;
  return -binomial(l + 1, 2);
}

BigInt h_closed(unsigned n) {
  const unsigned long l = n / 2;
  if (n % 2 == 0) {
    return -(BigInt(l) * binomial(l + 1, 3) + binomial(l + 2, 4));
  }
  return -(BigInt(l + 1) * binomial(l + 2, 3) + binomial(l + 2, 4));
}

unsigned theorem_b_predict(unsigned n) {
  const unsigned long l = n / 2;
  BigInt t;
  if (n % 2 == 1) {
    t = BigInt(-16) * BigInt(l + 1) * binomial(l + 2, 3) - 16 * binomial(l + 2, 4) -
        4 * binomial(l + 1, 2) + 1;
  } else {
    t = BigInt(-16) * BigInt(l) * binomial(l + 1, 3) - 16 * binomial(l + 2, 4) -
        4 * binomial(l + 1, 2) + 1;
    if (l % 2 == 1) t = -t;
  }
  return static_cast<unsigned>(mod_reduced(t, BigInt(64)).get_ui());
}

BigInt theorem_a_predict(unsigned n, unsigned r) {
  const BigInt modulus = pow2(r);
  BigInt t;
  if (n % 2 == 0) {
    t = BigInt(n) + 1;
  } else {
    t = BigInt(n);
    if (((n - 1) / 2) % 2 == 1) t = -t;
  }
  return mod_reduced(t, modulus);
}

unsigned mod32_reduce(unsigned long lambda) {
  const unsigned theta = static_cast<unsigned>(lambda % 8);
  const bool even_binomial = theta == 0 || theta == 1 || theta == 6 || theta == 7;
  BigInt two_branch = BigInt(-2) * BigInt(lambda) * BigInt(lambda + 1) + (even_binomial ? 1 : 17);
  BigInt collapsed = BigInt(2) * BigInt(lambda) + 1;
  if (theta % 2 == 1) collapsed = -collapsed;
  const BigInt m(32);
  const BigInt a = mod_reduced(two_branch, m);
  const BigInt b = mod_reduced(collapsed, m);
  if (a != b) {
    throw internal_mismatch("mod-32 branch forms disagree at lambda = " + std::to_string(lambda) +
                            ": " + to_decimal(a) + " vs " + to_decimal(b));
  }
  return static_cast<unsigned>(a.get_ui());
}

namespace {

const BigInt& require_bn(const BnTable& bn, unsigned n, const std::string& check) {
  auto it = bn.find(n);
  if (it == bn.end()) {
    throw insufficient_data(check + ": B_" + std::to_string(n) + " is not available");
  }
  return it->second;
}

ResidueClaim make_claim(unsigned n, BigInt modulus, BigInt predicted, const BigInt& b) {
  ResidueClaim c;
  c.n = n;
  c.modulus = std::move(modulus);
  c.predicted = std::move(predicted);
  c.observed = mod_reduced(b, c.modulus);
  c.verdict = (*c.observed == c.predicted) ? Verdict::match : Verdict::mismatch;
  return c;
}

void finish(VerifyReport& r) {
  for (const auto& c : r.claims) {
    if (c.verdict == Verdict::mismatch) r.mismatches.push_back(c.n);
  }
}

}  // namespace

VerifyReport verify_theorem_a(const BnTable& bn, unsigned r, unsigned max_n) {
  if (r < 1 || r > 64) throw error("modulus exponent r must be in 1..64");
  VerifyReport rep;
  rep.check = "theoremA(r=" + std::to_string(r) + ")";
  const BigInt modulus = pow2(r);
  for (unsigned n = 1; n <= max_n; ++n) {
    rep.claims.push_back(make_claim(n, modulus, theorem_a_predict(n, r),
                                    require_bn(bn, n, rep.check)));
  }
  finish(rep);
  if (r <= 5) {
    rep.expectation_met = rep.mismatches.empty();
    rep.summary = rep.expectation_met
                      ? "holds for all n = 1.." + std::to_string(max_n)
                      : std::to_string(rep.mismatches.size()) + " unexpected mismatches";
  } else {
    // Documented counterexamples; every one inside the range must show up.
    bool all_present = true;
    for (unsigned doc : {3u, 5u, 6u}) {
      if (doc <= max_n &&
          std::find(rep.mismatches.begin(), rep.mismatches.end(), doc) == rep.mismatches.end()) {
        all_present = false;
      }
    }
    rep.expectation_met = all_present;
    rep.summary = "fails as documented: " + std::to_string(rep.mismatches.size()) +
                  " counterexamples in n = 1.." + std::to_string(max_n);
    if (!all_present) rep.summary = "documented counterexamples missing from scan";
  }
  return rep;
}

VerifyReport verify_theorem_b(const BnTable& bn, unsigned max_n) {
  VerifyReport rep;
  rep.check = "theoremB";
  const BigInt modulus(64);
  for (unsigned n = 1; n <= max_n; ++n) {
    rep.claims.push_back(
        make_claim(n, modulus, BigInt(theorem_b_predict(n)), require_bn(bn, n, rep.check)));
  }
  finish(rep);
  rep.expectation_met = rep.mismatches.empty();
  rep.summary = rep.expectation_met ? "B_n mod 64 matches for n = 1.." + std::to_string(max_n)
                                    : std::to_string(rep.mismatches.size()) + " mismatches";
  return rep;
}

VerifyReport verify_corollary_a(const BnTable& bn, unsigned max_n) {
  VerifyReport rep;
  rep.check = "corA";
  const BigInt modulus(2);
  for (unsigned n = 1; n <= max_n; ++n) {
    rep.claims.push_back(make_claim(n, modulus, BigInt(1), require_bn(bn, n, rep.check)));
  }
  finish(rep);
  rep.expectation_met = rep.mismatches.empty();
  rep.summary = rep.expectation_met ? "all B_n odd for n = 1.." + std::to_string(max_n)
                                    : "even B_n found";
  return rep;
}

VerifyReport verify_corollary_1(const BnTable& bn, unsigned max_n) {
  VerifyReport rep;
  rep.check = "cor1";
  const BigInt modulus(64);
  for (unsigned n = 1; n <= max_n; ++n) {
    const BigInt& b_n = require_bn(bn, n, rep.check);
    const BigInt& b_shift = require_bn(bn, n + 32, rep.check);
    rep.claims.push_back(make_claim(n, modulus, mod_reduced(b_n + 32, modulus), b_shift));
  }
  finish(rep);
  rep.expectation_met = rep.mismatches.empty();
  rep.summary = rep.expectation_met
                    ? "B_(n+32) = B_n + 32 (mod 64) for n = 1.." + std::to_string(max_n)
                    : std::to_string(rep.mismatches.size()) + " mismatches";
  return rep;
}

VerifyReport verify_corollary_2(const BnTable& bn, unsigned max_n) {
  VerifyReport rep;
  rep.check = "cor2";
  if (max_n < 65) {
    throw insufficient_data("cor2: need max_n >= 65 to compare a full period-64 shift");
  }
  const BigInt modulus(64);
  for (unsigned n = 1; n + 64 <= max_n; ++n) {
    const BigInt& b_n = require_bn(bn, n, rep.check);
    const BigInt& b_shift = require_bn(bn, n + 64, rep.check);
    rep.claims.push_back(make_claim(n, modulus, mod_reduced(b_n, modulus), b_shift));
  }
  finish(rep);

  unsigned half_period_mismatches = 0;
  unsigned half_period_points = 0;
  for (unsigned n = 1; n + 32 <= max_n; ++n) {
    const BigInt& b_n = require_bn(bn, n, rep.check);
    const BigInt& b_shift = require_bn(bn, n + 32, rep.check);
    ++half_period_points;
    if (mod_reduced(b_n, modulus) != mod_reduced(b_shift, modulus)) ++half_period_mismatches;
  }
  rep.expectation_met = rep.mismatches.empty() && half_period_mismatches > 0;
  rep.summary = "period 64: " + std::to_string(rep.mismatches.size()) + " mismatches on " +
                std::to_string(rep.claims.size()) + " overlap points; period 32 fails at " +
                std::to_string(half_period_mismatches) + " of " +
                std::to_string(half_period_points) + " points";
  return rep;
}

}  // namespace dimer
