#include "dimer/pair_symmetric.hpp"

#include <algorithm>
#include <map>

#include "dimer/cheb.hpp"
#include "dimer/errors.hpp"

namespace dimer {

std::vector<BigInt> power_sums_from_poly(const IntPoly& f, unsigned long K) {
  if (!f.is_monic()) throw non_monic("power sums require a monic polynomial");
  const unsigned long n = static_cast<unsigned long>(f.degree());
  // c[i] = coefficient of x^(n-i), i = 1..n
  std::vector<BigInt> c(n + 1);
  for (unsigned long i = 1; i <= n; ++i) c[i] = f.coeff(n - i);

  std::vector<BigInt> p(K + 1);
  p[0] = n;
  for (unsigned long k = 1; k <= K; ++k) {
    BigInt s(0);
    if (k <= n) s = BigInt(-static_cast<long>(k)) * c[k];
    const unsigned long top = std::min(k - 1, n);
    for (unsigned long i = 1; i <= top; ++i) s -= c[i] * p[k - i];
    p[k] = s;
  }
  return p;
}

std::vector<BigInt> pair_sum_power_sums(const std::vector<BigInt>& p, unsigned n,
                                        unsigned long K) {
  if (p.size() < K + 1) throw error("pair_sum_power_sums: need p_0..p_K");
  std::vector<BigInt> pi(K + 1);
  pi[0] = binomial(n, 2);
  // Rolling Pascal row: binom[m] = C(k, m) for the current k.
  std::vector<BigInt> binom(K + 1);
  binom[0] = 1;
  BigInt two_k(1);
  for (unsigned long k = 1; k <= K; ++k) {
    for (unsigned long m = k; m >= 1; --m) binom[m] += binom[m - 1];
    two_k <<= 1;
    BigInt tot(0);
    for (unsigned long m = 0; m <= k; ++m) tot += binom[m] * p[m] * p[k - m];
    tot -= two_k * p[k];
    if (mpz_odd_p(tot.get_mpz_t())) {
      throw halving_not_exact("pair power sum pi_" + std::to_string(k) + " is odd before halving");
    }
    pi[k] = tot >> 1;
  }
  return pi;
}

std::vector<BigInt> elementary_from_power_sums(const std::vector<BigInt>& pw, unsigned long q) {
  if (pw.size() < q + 1) throw error("elementary_from_power_sums: need pw_0..pw_q");
  std::vector<BigInt> e(q + 1);
  e[0] = 1;
  for (unsigned long k = 1; k <= q; ++k) {
    BigInt s(0);
    for (unsigned long i = 1; i <= k; ++i) {
      if (i & 1) {
        s += pw[i] * e[k - i];
      } else {
        s -= pw[i] * e[k - i];
      }
    }
    BigInt r;
    BigInt kk(static_cast<unsigned long>(k));
    mpz_tdiv_qr(e[k].get_mpz_t(), r.get_mpz_t(), s.get_mpz_t(), kk.get_mpz_t());
    if (sgn(r) != 0) {
      throw inexact_newton_division("Newton division by " + std::to_string(k) + " is not exact");
    }
  }
  return e;
}

PairSummary h_poly(unsigned n) {
  PairSummary out;
  out.n = n;
  const unsigned long q = n >= 2 ? static_cast<unsigned long>(n) * (n - 1) / 2 : 0;
  out.q = q;

  if (q == 0) {
    // Empty product: h = 1, sigma = (1).
    out.h = IntPoly::constant(BigInt(1));
    out.sigma = {BigInt(1)};
  } else {
    const IntPoly p = p_poly(n);
    const auto power_sums = power_sums_from_poly(p, q);
    const auto pair_sums = pair_sum_power_sums(power_sums, n, q);
    const auto e = elementary_from_power_sums(pair_sums, q);
    // E(y) = sum_j e_j y^(q-j), then h(x) = E(x - 4).
    std::vector<BigInt> big_e(q + 1);
    for (unsigned long j = 0; j <= q; ++j) big_e[q - j] = e[j];
    out.h = IntPoly(std::move(big_e)).shifted(BigInt(-4));
    out.sigma.resize(q + 1);
    for (unsigned long j = 0; j <= q; ++j) out.sigma[j] = out.h.coeff(q - j);
  }

  auto [u, v, w] = uvw(out);
  out.U = u;
  out.V = v;
  out.W = w;
  // U is +-1, so dividing by U is the same as multiplying.
  out.G = out.V * out.U;
  out.H = out.W * out.U;
  return out;
}

std::tuple<BigInt, BigInt, BigInt> uvw(const PairSummary& s) {
  auto sig = [&](long j) -> BigInt {
    if (j < 0 || j > static_cast<long>(s.q)) return BigInt(0);
    return s.sigma[static_cast<std::size_t>(j)];
  };
  BigInt u = sig(static_cast<long>(s.q));
  if (u != 1 && u != -1) {
    throw unexpected_u("sigma_q = " + to_decimal(u) + " for n = " + std::to_string(s.n));
  }
  return {u, sig(static_cast<long>(s.q) - 1), sig(static_cast<long>(s.q) - 2)};
}

BigInt b_from_h(const PairSummary& s) {
  BigInt b = s.h.eval(BigInt(4));
  if (sgn(b) <= 0) {
    throw non_positive_b("h_" + std::to_string(s.n) + "(4) = " + to_decimal(b));
  }
  return b;
}

BigInt monomial_symmetric_sum(const std::vector<unsigned>& exponents,
                              const std::vector<BigInt>& values) {
  if (exponents.empty()) throw error("monomial_symmetric_sum: empty exponent list");
  if (exponents.size() > values.size()) {
    throw error("monomial_symmetric_sum: more exponents than values");
  }
  for (unsigned e : exponents) {
    if (e == 0) throw error("monomial_symmetric_sum: exponents must be positive");
  }
  const std::size_t t = exponents.size();
  const std::size_t nv = values.size();

  // Sum over all injective ordered assignments, then divide by the number of
  // permutations of equal exponents (each distinct monomial is produced once
  // per automorphism of the exponent multiset).
  BigInt total(0);
  std::vector<std::size_t> pick(t);
  std::vector<bool> used(nv, false);
  auto rec = [&](auto&& self, std::size_t slot, const BigInt& acc) -> void {
    if (slot == t) {
      total += acc;
      return;
    }
    for (std::size_t i = 0; i < nv; ++i) {
      if (used[i]) continue;
      BigInt term;
      mpz_pow_ui(term.get_mpz_t(), values[i].get_mpz_t(), exponents[slot]);
      used[i] = true;
      self(self, slot + 1, acc * term);
      used[i] = false;
    }
  };
  rec(rec, 0, BigInt(1));

  std::map<unsigned, unsigned> mult;
  for (unsigned e : exponents) ++mult[e];
  BigInt autg(1);
  for (const auto& [e, m] : mult) {
    (void)e;
    for (unsigned i = 2; i <= m; ++i) autg *= i;
  }
  return div_exact_checked(total, autg);
}

}  // namespace dimer
