#pragma once

#include <vector>

#include "kls/polynomial.hpp"

namespace kls {

// p = sum gamma_i x^i (1+x)^{d-2i}; defined for palindromic p.
struct GammaDecomposition {
  int degree = 0;
  std::vector<mpz_class> gamma;  // entries 0 .. floor(d/2)

  bool nonnegative() const {
    for (const auto& g : gamma)
      if (g < 0) return false;
    return true;
  }
};

// poly_rev(p, d) == p; requires deg p <= d.
bool is_palindromic(const IntPolynomial& p, int d);

// Unique integer decomposition by leading-coefficient peeling; throws
// NotPalindromic.
GammaDecomposition gamma_vector(const IntPolynomial& p, int d);

// m-th Veronese transform of the sequence h with respect to degree d:
// resamples the numerator of h(x)/(1-x)^{d+1} at every m-th power
// series coefficient.  Requires d >= len(h)-1 (DegreeTooSmall) and
// m >= 1 (ParameterOutOfRange).  Returns d+1 entries.
std::vector<mpz_class> veronese(const std::vector<mpz_class>& h, int d, int m);

// Number of distinct real roots, by exact Sturm chains over the
// rationals (content-stripped integer remainders).  Throws
// ZeroPolynomial.
int real_root_count(const IntPolynomial& p);

// All complex roots real (counted with multiplicity): the square-free
// part has as many distinct real roots as its degree.
bool is_real_rooted(const IntPolynomial& p);

// Coefficients rise to a peak then fall.
bool is_unimodal(const IntPolynomial& p);

// All coefficients >= 0.
bool is_nonneg(const IntPolynomial& p);

}  // namespace kls
