#include "dimer/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace dimer {

IntPoly::IntPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long v : ascending) coeffs_.emplace_back(v);
  normalize();
}

IntPoly IntPoly::constant(BigInt c) {
  IntPoly p;
  if (sgn(c) != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

IntPoly IntPoly::monomial(std::size_t k, BigInt c) {
  IntPoly p;
  if (sgn(c) != 0) {
    p.coeffs_.assign(k, BigInt(0));
    p.coeffs_.push_back(std::move(c));
  }
  return p;
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

bool IntPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

const BigInt& IntPoly::leading() const {
  if (coeffs_.empty()) throw zero_polynomial("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

const BigInt& IntPoly::coeff(std::size_t i) const {
  static const BigInt zero(0);
  return i < coeffs_.size() ? coeffs_[i] : zero;
}

IntPoly IntPoly::operator-() const {
  IntPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.coeff(i) + b.coeff(i);
  r.normalize();
  return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.coeff(i) - b.coeff(i);
  r.normalize();
  return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  IntPoly r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  r.normalize();
  return r;
}

IntPoly operator*(const BigInt& s, const IntPoly& a) {
  if (sgn(s) == 0) return IntPoly();
  IntPoly r(a);
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

IntPoly IntPoly::derivative() const {
  IntPoly r;
  if (coeffs_.size() <= 1) return r;
  r.coeffs_.resize(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) r.coeffs_[i - 1] = BigInt(i) * coeffs_[i];
  r.normalize();
  return r;
}

IntPoly IntPoly::shifted(const BigInt& c) const {
  // Ruffini-Horner Taylor shift, in place on a copy.
  IntPoly r(*this);
  if (r.coeffs_.size() <= 1 || sgn(c) == 0) return r;
  const std::size_t d = r.coeffs_.size() - 1;
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = d; i-- > k;) {
      r.coeffs_[i] += c * r.coeffs_[i + 1];
    }
  }
  return r;
}

IntPoly IntPoly::negated_variable() const {
  IntPoly r(*this);
  for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc *= x;
    acc += coeffs_[i];
  }
  return acc;
}

BigInt IntPoly::content() const {
  BigInt g(0);
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    BigInt a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (i == 0 || a != 1) os << a.get_str(10);
    if (i > 0) {
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

// Pseudo-remainder: returns R with lc(B)^(deg A - deg B + 1) * A = Q*B + R.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> r(a.coeffs().begin(), a.coeffs().end());
  const std::vector<BigInt>& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const BigInt& d = bc.back();
  long e = static_cast<long>(r.size() - 1) - static_cast<long>(db) + 1;
  auto deg_of = [](const std::vector<BigInt>& v) {
    std::size_t n = v.size();
    while (n > 0 && sgn(v[n - 1]) == 0) --n;
    return static_cast<long>(n) - 1;
  };
  long dr = deg_of(r);
  while (dr >= static_cast<long>(db)) {
    const std::size_t k = static_cast<std::size_t>(dr) - db;
    BigInt lr = r[static_cast<std::size_t>(dr)];
    for (auto& c : r) c *= d;
    for (std::size_t i = 0; i <= db; ++i) {
      r[i + k] -= lr * bc[i];
    }
    --e;
    dr = deg_of(r);
  }
  // Early degree drops skip multiplications by lc(B); restore them so the
  // subresultant divisions stay exact.
  if (e > 0) {
    BigInt scale;
    mpz_pow_ui(scale.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& c : r) c *= scale;
  }
  r.resize(dr < 0 ? 0 : static_cast<std::size_t>(dr) + 1);
  return IntPoly(std::move(r));
}

BigInt pow_big(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Resultant in the classical orientation (lc(a)^deg(b) * prod b over a-roots),
// subresultant PRS with content extraction.
BigInt resultant_prs_classical(IntPoly a, IntPoly b) {
  if (a.is_zero() || b.is_zero()) throw zero_polynomial("resultant of a zero polynomial");
  int s = 1;
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    std::swap(a, b);
  }
  if (b.degree() == 0) {
    return BigInt(s) * pow_big(b.leading(), static_cast<unsigned long>(a.degree()));
  }
  const BigInt ca = a.content();
  const BigInt cb = b.content();
  auto divide_content = [](IntPoly& p, const BigInt& c) {
    if (c == 1) return;
    std::vector<BigInt> v = p.coeffs();
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    p = IntPoly(std::move(v));
  };
  divide_content(a, ca);
  divide_content(b, cb);
  BigInt t = BigInt(s) * pow_big(ca, static_cast<unsigned long>(b.degree())) *
             pow_big(cb, static_cast<unsigned long>(a.degree()));
  BigInt g(1), h(1);
  while (true) {
    const long delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) t = -t;
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) return BigInt(0);  // common factor
    a = b;
    BigInt denom = g * pow_big(h, static_cast<unsigned long>(delta));
    {
      std::vector<BigInt> v = r.coeffs();
      for (auto& c : v) {
        BigInt q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), denom.get_mpz_t());
        c = q;
      }
      b = IntPoly(std::move(v));
    }
    g = a.leading();
    if (delta > 0) {
      h = div_exact_checked(pow_big(g, static_cast<unsigned long>(delta)),
                            pow_big(h, static_cast<unsigned long>(delta - 1)));
    }
    if (b.degree() == 0) {
      const unsigned long da = static_cast<unsigned long>(a.degree());
      BigInt res = div_exact_checked(pow_big(b.leading(), da), pow_big(h, da - 1));
      return t * res;
    }
  }
}

}  // namespace

BigInt resultant(const IntPoly& f, const IntPoly& g) {
  // Library orientation: lc(g)^deg(f) * prod of f over g's roots, which is
  // the classical resultant with the arguments exchanged.
  return resultant_prs_classical(g, f);
}

BigInt resultant_sylvester(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw zero_polynomial("resultant of a zero polynomial");
  // Sylvester matrix of (g, f): deg(f) rows of g's coefficients followed by
  // deg(g) rows of f's, each row in descending degree order.
  const std::size_t m = static_cast<std::size_t>(g.degree());
  const std::size_t n = static_cast<std::size_t>(f.degree());
  const std::size_t size = m + n;
  if (size == 0) return BigInt(1);
  std::vector<std::vector<BigInt>> mat(size, std::vector<BigInt>(size, BigInt(0)));
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t j = 0; j <= m; ++j) mat[row][row + j] = g.coeff(m - j);
  }
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t j = 0; j <= n; ++j) mat[n + row][row + j] = f.coeff(n - j);
  }

  // Bareiss fraction-free elimination.
  int sign = 1;
  BigInt prev(1);
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (sgn(mat[k][k]) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < size && sgn(mat[pivot][k]) == 0) ++pivot;
      if (pivot == size) return BigInt(0);
      std::swap(mat[k], mat[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        BigInt num = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j];
        mpz_divexact(mat[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      mat[i][k] = 0;
    }
    prev = mat[k][k];
  }
  return BigInt(sign) * mat[size - 1][size - 1];
}

BigInt discriminant(const IntPoly& f) {
  if (f.is_zero()) throw zero_polynomial("discriminant of the zero polynomial");
  if (!f.is_monic()) throw non_monic("discriminant requires a monic polynomial, got " + f.str());
  const int d = f.degree();
  if (d <= 1) return BigInt(1);
  BigInt r = resultant(f, f.derivative());
  const long exp = static_cast<long>(d) * (d - 1) / 2;
  return (exp & 1) ? BigInt(-r) : r;
}

}  // namespace dimer
