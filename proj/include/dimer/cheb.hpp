#ifndef DIMER_CHEB_HPP
#define DIMER_CHEB_HPP

#include <vector>

#include "dimer/poly.hpp"

namespace dimer {

// The polynomial family behind the residue theory. s_poly(n) is the monic
// degree-n polynomial defined by the three-term recurrence
//   S_{n+1} = x*S_n - S_{n-1},  S_{-1} = -1, S_0 = 1;
// p_poly(n) and q_poly(n) are the monic degree-n polynomials whose roots are
// the squares resp. fourth powers of S_n's roots. Everything here is exact
// integer arithmetic; no root is ever materialized numerically.

IntPoly s_poly(unsigned n);

// Coefficient magnitudes s_0..s_n with S_n(x) = sum_nu (-1)^nu s_nu x^(n-nu):
//   s_(2r)   = (-1)^r   * C(n-r,   r)
//   s_(2r+1) = (-1)^(r+1) * C(n-1-r, r)
std::vector<BigInt> s_coeffs_closed(unsigned n);

// Reverse-root transform of a monic f with |f(0)| = 1: returns the monic
// polynomial x^deg(f) * f(1/x) / f(0), whose roots are the reciprocals of
// f's roots. An involution.
IntPoly reverse_normalized(const IntPoly& f);

// reverse_normalized applied to S_n; coefficient of x^(n-k) is
// (-1)^k * s_n^-1 * s_(n-k).
IntPoly reverse_poly(unsigned n);

// Keeps only even-degree terms of f as a polynomial in x^2. Every odd
// coefficient must be exactly zero; otherwise throws odd_coefficient_nonzero
// rather than masking a sign error upstream.
IntPoly even_part(const IntPoly& f);

// P_n(x) = sum_nu (-1)^nu C(2n-nu, nu) x^(n-nu), directly from the closed
// coefficients.
IntPoly p_poly(unsigned n);

// P_n recomputed through the identity P_n(x^2) = (-1)^n S_n(x) S_n(-x);
// must agree with p_poly.
IntPoly p_from_s(unsigned n);

// Q_n from Q_n(x^2) = (-1)^n P_n(x) P_n(-x).
IntPoly q_poly(unsigned n);

struct ChebFamily {
  unsigned n;
  IntPoly s;  // S_n
  IntPoly p;  // P_n
  IntPoly q;  // Q_n
};

ChebFamily make_cheb_family(unsigned n);

}  // namespace dimer

#endif  // DIMER_CHEB_HPP
