#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "kls/errors.hpp"

namespace kls {

// Dense univariate polynomial with arbitrary-precision integer
// coefficients, stored in ascending degree order.  The zero polynomial
// is the empty vector; otherwise the trailing coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(long constant);  // NOLINT: implicit by design, enables p + 1
  explicit IntPolynomial(std::vector<mpz_class> coeffs);

  static IntPolynomial monomial(mpz_class c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Zero outside the stored range.
  const mpz_class& coeff(int i) const;
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  mpz_class eval(const mpz_class& x) const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    a += b;
    return a;
  }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    a -= b;
    return a;
  }
  friend IntPolynomial operator*(const IntPolynomial& a,
                                 const IntPolynomial& b);
  bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

  // Drops all terms of degree > bound.
  IntPolynomial truncated(int bound) const;

  // Ascending render, e.g. "1 - 2x^2 + x^4".
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

// x^d * p(1/x) with zero-padding: coefficient i of the result is
// coefficient d-i of p.  Throws DegreeExceeded when deg p > d.
IntPolynomial poly_rev(const IntPolynomial& p, int degree_bound);

// Exact quotient p / (x-1).  Throws NotDivisible unless p(1) = 0.
IntPolynomial poly_div_x_minus_1(const IntPolynomial& p);

// (x-1)^e expanded.
IntPolynomial x_minus_one_pow(int e);

// Exact binomial coefficient; 0 when k < 0 or k > n.
mpz_class binomial(long n, long k);

}  // namespace kls
