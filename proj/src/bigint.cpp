#include "dimer/bigint.hpp"

namespace dimer {

BigInt integer_sqrt_exact(const BigInt& v) {
  if (sgn(v) < 0) {
    throw not_a_perfect_square("integer_sqrt_exact: negative input " + to_decimal(v));
  }
  BigInt root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t());
  if (sgn(rem) != 0) {
    throw not_a_perfect_square("integer_sqrt_exact: " + to_decimal(v) + " is not a perfect square");
  }
  return root;
}

bool is_perfect_square(const BigInt& v) {
  return sgn(v) >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt pow2(unsigned long r) {
  BigInt v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, r);
  return v;
}

BigInt mod_reduced(const BigInt& value, const BigInt& modulus) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

BigInt div_exact_checked(const BigInt& numerator, const BigInt& denominator) {
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  if (sgn(r) != 0) {
    throw inexact_division("division of " + to_decimal(numerator) + " by " +
                           to_decimal(denominator) + " leaves remainder");
  }
  return q;
}

std::string to_decimal(const BigInt& v) { return v.get_str(10); }

BigInt from_decimal(const std::string& s) {
  if (s.empty()) {
    throw schema_error("empty integer literal");
  }
  BigInt v;
  if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0) {
    throw schema_error("bad integer literal: '" + s + "'");
  }
  return v;
}

}  // namespace dimer
