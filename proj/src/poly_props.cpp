#include "kls/poly_props.hpp"

#include <algorithm>

namespace kls {

bool is_palindromic(const IntPolynomial& p, int d) {
  return poly_rev(p, d) == p;
}

GammaDecomposition gamma_vector(const IntPolynomial& p, int d) {
  if (p.degree() > d || !is_palindromic(p, d))
    throw NotPalindromic("gamma_vector: " + p.to_string() +
                         " is not palindromic for degree " + std::to_string(d));
  GammaDecomposition out;
  out.degree = d;
  out.gamma.resize(d / 2 + 1);
  // x^i (1+x)^{d-2i} tops out at degree d-i; peel from the top down.
  IntPolynomial work = p;
  IntPolynomial one_plus_x({std::vector<mpz_class>{1, 1}});
  for (int i = 0; i <= d / 2; ++i) {
    out.gamma[i] = work.coeff(d - i);
    if (out.gamma[i] == 0) continue;
    IntPolynomial basis = IntPolynomial::monomial(out.gamma[i], i);
    for (int k = 0; k < d - 2 * i; ++k) basis = basis * one_plus_x;
    work -= basis;
  }
  // Guaranteed by palindromicity.
  if (!work.is_zero())
    throw NotPalindromic("gamma_vector: nonzero residue " + work.to_string());
  return out;
}

std::vector<mpz_class> veronese(const std::vector<mpz_class>& h, int d,
                                int m) {
  if (d < static_cast<int>(h.size()) - 1)
    throw DegreeTooSmall("veronese: d < deg h");
  if (m < 1) throw ParameterOutOfRange("veronese: m >= 1");
  // a_n = sum_i h_i C(n-i+d, d), the power series of h(x)/(1-x)^{d+1}.
  std::vector<mpz_class> a(static_cast<size_t>(m) * d + 1);
  for (size_t n = 0; n < a.size(); ++n) {
    mpz_class acc = 0;
    for (size_t i = 0; i < h.size(); ++i)
      if (static_cast<long>(n) - static_cast<long>(i) >= 0)
        acc += h[i] * binomial(static_cast<long>(n - i) + d, d);
    a[n] = std::move(acc);
  }
  std::vector<mpz_class> out(d + 1);
  for (int j = 0; j <= d; ++j) {
    mpz_class acc = 0;
    for (int k = 0; k <= j; ++k) {
      mpz_class term = binomial(d + 1, j - k) * a[static_cast<size_t>(m) * k];
      if ((j - k) % 2 != 0) term = -term;
      acc += term;
    }
    out[j] = std::move(acc);
  }
  return out;
}

namespace {

using Coeffs = std::vector<mpz_class>;  // ascending, trailing nonzero

void strip_content(Coeffs& p) {
  if (p.empty()) return;
  mpz_class g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : p) c /= g;
}

Coeffs derivative(const Coeffs& p) {
  Coeffs out;
  for (size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * i);
  return out;
}

// Sign-faithful remainder: a positive rational multiple of rem(a, b).
// Each elimination step scales a by lc(b); flips are undone at the end.
Coeffs signed_rem(Coeffs a, const Coeffs& b) {
  const mpz_class& lead = b.back();
  bool flipped = false;
  while (a.size() >= b.size() && !a.empty()) {
    mpz_class q = a.back();
    size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lead;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (lead < 0) flipped = !flipped;
  }
  if (flipped)
    for (auto& c : a) c = -c;
  strip_content(a);
  return a;
}

Coeffs primitive_gcd(Coeffs a, Coeffs b) {
  strip_content(a);
  strip_content(b);
  while (!b.empty()) {
    Coeffs r = signed_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() < 0)
    for (auto& c : a) c = -c;
  return a;
}

// Exact division of primitive integer polynomials (Gauss's lemma makes
// the quotient integral whenever d divides p).
Coeffs exact_div(const Coeffs& p, const Coeffs& d) {
  Coeffs rem = p;
  Coeffs q(p.size() - d.size() + 1, mpz_class(0));
  while (rem.size() >= d.size()) {
    size_t before = rem.size();
    mpz_class c = rem.back() / d.back();
    size_t shift = rem.size() - d.size();
    q[shift] = c;
    for (size_t i = 0; i < d.size(); ++i) rem[shift + i] -= c * d[i];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (rem.size() >= before)
      throw Error("exact_div: inputs not exactly divisible");
  }
  return q;
}

Coeffs squarefree_part(Coeffs p) {
  strip_content(p);
  if (p.size() <= 2) return p;
  Coeffs g = primitive_gcd(p, derivative(p));
  if (g.size() <= 1) return p;
  Coeffs sf = exact_div(p, g);
  strip_content(sf);
  return sf;
}

int sign_at_infinity(const Coeffs& p, bool positive) {
  if (p.empty()) return 0;
  int s = sgn(p.back());
  if (!positive && (p.size() - 1) % 2 != 0) s = -s;
  return s;
}

int variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

int real_root_count(const IntPolynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("real_root_count: zero polynomial");
  Coeffs sf = squarefree_part(p.coeffs());
  if (sf.size() <= 1) return 0;
  std::vector<Coeffs> chain{sf, derivative(sf)};
  strip_content(chain[1]);
  while (chain.back().size() > 1) {
    Coeffs r = signed_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  std::vector<int> at_minus, at_plus;
  for (const auto& q : chain) {
    at_minus.push_back(sign_at_infinity(q, false));
    at_plus.push_back(sign_at_infinity(q, true));
  }
  return variations(at_minus) - variations(at_plus);
}

bool is_real_rooted(const IntPolynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("is_real_rooted: zero polynomial");
  Coeffs sf = squarefree_part(p.coeffs());
  return real_root_count(p) == static_cast<int>(sf.size()) - 1;
}

bool is_unimodal(const IntPolynomial& p) {
  const auto& c = p.coeffs();
  size_t i = 1;
  while (i < c.size() && c[i - 1] <= c[i]) ++i;
  while (i < c.size() && c[i - 1] >= c[i]) ++i;
  return i >= c.size();
}

bool is_nonneg(const IntPolynomial& p) {
  for (const auto& c : p.coeffs())
    if (c < 0) return false;
  return true;
}

}  // namespace kls
