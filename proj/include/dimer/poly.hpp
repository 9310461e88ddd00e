#ifndef DIMER_POLY_HPP
#define DIMER_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "dimer/bigint.hpp"

namespace dimer {

// Dense univariate polynomial over BigInt. Coefficients are stored in
// ascending degree order and kept normalized: the vector never ends in a
// zero, and the zero polynomial is the empty vector (degree() == -1).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> ascending);
  IntPoly(std::initializer_list<long> ascending);

  static IntPoly constant(BigInt c);
  // c * x^k
  static IntPoly monomial(std::size_t k, BigInt c = BigInt(1));

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_monic() const;
  const BigInt& leading() const;  // throws zero_polynomial on the zero polynomial
  const BigInt& coeff(std::size_t i) const;  // 0 beyond the degree
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const BigInt& s, const IntPoly& a);
  friend IntPoly operator*(const IntPoly& a, const BigInt& s) { return s * a; }

  IntPoly derivative() const;
  // Composition with a linear shift of the variable: returns f(x + c).
  IntPoly shifted(const BigInt& c) const;
  // f(-x)
  IntPoly negated_variable() const;

  BigInt eval(const BigInt& x) const;  // Horner

  // gcd of all coefficients, nonnegative; 0 for the zero polynomial.
  BigInt content() const;

  std::string str() const;  // e.g. "x^2 - 3x + 1"
  friend std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.str(); }

 private:
  std::vector<BigInt> coeffs_;
  void normalize();
};

// Resultant of f and g, both nonzero. Sign convention, locked by the
// (x-1, x-2) |-> 1 test: resultant(f, g) = lc(g)^deg(f) * prod f(beta) over
// the roots beta of g. Computed by a subresultant polynomial remainder
// sequence, which scales to the degree ~256 inputs the discriminant route
// needs.
BigInt resultant(const IntPoly& f, const IntPoly& g);

// Same value, evaluated as a Sylvester-matrix determinant with Bareiss
// fraction-free elimination. Cubic in the degree; kept as an independent
// low-degree cross-check of the PRS backend.
BigInt resultant_sylvester(const IntPoly& f, const IntPoly& g);

// (-1)^(d(d-1)/2) * resultant(f, f'). For monic f this is the product of
// squared root differences. f must be monic; degrees 0 and 1 return 1 so
// that discriminant ratios need no special-casing at the low end.
BigInt discriminant(const IntPoly& f);

}  // namespace dimer

#endif  // DIMER_POLY_HPP
