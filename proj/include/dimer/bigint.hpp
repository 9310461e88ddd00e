#ifndef DIMER_BIGINT_HPP
#define DIMER_BIGINT_HPP

#include <gmpxx.h>

#include <string>

#include "dimer/errors.hpp"

namespace dimer {

// All counts, coefficients and resultants live in exact arbitrary-precision
// integers. GMP's mpz_class carries the representation; everything on top of
// it (square-root extraction, residues, binomials) is wrapped here so the
// rest of the library never touches raw mpz calls.
using BigInt = mpz_class;

// Exact square root: returns s >= 0 with s*s == v.
// Throws not_a_perfect_square when v < 0 or v is not a square.
BigInt integer_sqrt_exact(const BigInt& v);

bool is_perfect_square(const BigInt& v);

// Binomial coefficient; 0 when k > n.
BigInt binomial(unsigned long n, unsigned long k);

BigInt pow2(unsigned long r);

// Canonical residue in [0, modulus). modulus must be positive.
BigInt mod_reduced(const BigInt& value, const BigInt& modulus);

// Quotient of an exact division; throws inexact_division otherwise.
BigInt div_exact_checked(const BigInt& numerator, const BigInt& denominator);

std::string to_decimal(const BigInt& v);
BigInt from_decimal(const std::string& s);  // throws schema_error on junk

}  // namespace dimer

#endif  // DIMER_BIGINT_HPP
