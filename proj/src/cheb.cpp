#include "dimer/cheb.hpp"

#include <utility>

namespace dimer {

IntPoly s_poly(unsigned n) {
  IntPoly prev = IntPoly::constant(BigInt(-1));  // S_{-1}
  IntPoly cur = IntPoly::constant(BigInt(1));    // S_0
  const IntPoly x = IntPoly::monomial(1);
  for (unsigned k = 0; k < n; ++k) {
    IntPoly next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<BigInt> s_coeffs_closed(unsigned n) {
  std::vector<BigInt> s(n + 1);
  for (unsigned nu = 0; nu <= n; ++nu) {
    if (nu % 2 == 0) {
      const unsigned r = nu / 2;
      s[nu] = binomial(n - r, r);
      if (r & 1) s[nu] = -s[nu];
    } else {
      const unsigned r = (nu - 1) / 2;
      s[nu] = binomial(n - 1 - r, r);
      if (!(r & 1)) s[nu] = -s[nu];
    }
  }
  return s;
}

IntPoly reverse_normalized(const IntPoly& f) {
  if (f.is_zero()) throw zero_polynomial("reverse of the zero polynomial");
  if (!f.is_monic()) throw non_monic("reverse transform requires a monic polynomial");
  const BigInt& c0 = f.coeff(0);
  if (c0 != 1 && c0 != -1) {
    throw error("reverse transform requires constant term +-1, got " + to_decimal(c0));
  }
  std::vector<BigInt> rev(f.coeffs().rbegin(), f.coeffs().rend());
  if (c0 == -1) {
    for (auto& c : rev) c = -c;
  }
  return IntPoly(std::move(rev));
}

IntPoly reverse_poly(unsigned n) { return reverse_normalized(s_poly(n)); }

IntPoly even_part(const IntPoly& f) {
  const auto& c = f.coeffs();
  std::vector<BigInt> even((c.size() + 1) / 2);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i % 2 == 0) {
      even[i / 2] = c[i];
    } else if (sgn(c[i]) != 0) {
      throw odd_coefficient_nonzero("odd-degree coefficient x^" + std::to_string(i) +
                                    " = " + to_decimal(c[i]) + " in " + f.str());
    }
  }
  return IntPoly(std::move(even));
}

IntPoly p_poly(unsigned n) {
  std::vector<BigInt> c(n + 1);
  for (unsigned nu = 0; nu <= n; ++nu) {
    BigInt v = binomial(2 * n - nu, nu);
    if (nu & 1) v = -v;
    c[n - nu] = v;
  }
  return IntPoly(std::move(c));
}

IntPoly p_from_s(unsigned n) {
  const IntPoly s = s_poly(n);
  IntPoly prod = s * s.negated_variable();
  if (n & 1) prod = -prod;
  return even_part(prod);
}

IntPoly q_poly(unsigned n) {
  const IntPoly p = p_poly(n);
  IntPoly prod = p * p.negated_variable();
  if (n & 1) prod = -prod;
  return even_part(prod);
}

ChebFamily make_cheb_family(unsigned n) { return ChebFamily{n, s_poly(n), p_poly(n), q_poly(n)}; }

}  // namespace dimer
