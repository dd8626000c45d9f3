#include "kls/polynomial.hpp"

#include <sstream>
#include <utility>

namespace kls {

namespace {
const mpz_class kZero = 0;
}

IntPolynomial::IntPolynomial(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(mpz_class c, int degree) {
  IntPolynomial p;
  if (c != 0) {
    p.coeffs_.assign(degree + 1, kZero);
    p.coeffs_[degree] = std::move(c);
  }
  return p;
}

const mpz_class& IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[i];
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial{};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, kZero);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::truncated(int bound) const {
  if (bound < 0) return IntPolynomial{};
  if (degree() <= bound) return *this;
  std::vector<mpz_class> out(coeffs_.begin(), coeffs_.begin() + bound + 1);
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str();
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

IntPolynomial poly_rev(const IntPolynomial& p, int degree_bound) {
  if (p.degree() > degree_bound)
    throw DegreeExceeded("poly_rev: degree " + std::to_string(p.degree()) +
                         " exceeds bound " + std::to_string(degree_bound));
  if (p.is_zero()) return p;
  std::vector<mpz_class> out(degree_bound + 1);
  for (int i = 0; i <= degree_bound; ++i) out[i] = p.coeff(degree_bound - i);
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_div_x_minus_1(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  if (p.eval(1) != 0)
    throw NotDivisible("poly_div_x_minus_1: p(1) = " + p.eval(1).get_str());
  // Synthetic division: p_i = q_{i-1} - q_i.
  int d = p.degree();
  std::vector<mpz_class> q(d);
  mpz_class carry = p.coeff(d);
  for (int i = d - 1; i >= 0; --i) {
    q[i] = carry;
    carry = p.coeff(i) + carry;
  }
  return IntPolynomial(std::move(q));
}

IntPolynomial x_minus_one_pow(int e) {
  std::vector<mpz_class> out(e + 1);
  for (int k = 0; k <= e; ++k) {
    out[k] = binomial(e, k);
    if ((e - k) % 2 != 0) out[k] = -out[k];
  }
  return IntPolynomial(std::move(out));
}

mpz_class binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

}  // namespace kls
