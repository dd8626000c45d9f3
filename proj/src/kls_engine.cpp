#include "kls/kls_engine.hpp"

namespace kls {

IncidenceElement eulerian_kernel(PosetPtr p) {
  IncidenceElement e(std::move(p));
  const Poset& poset = e.poset();
  for (int id = 0; id < poset.interval_count(); ++id) {
    const auto& [s, t] = poset.interval(id);
    e.at_id(id) = x_minus_one_pow(poset.rho(s, t));
  }
  return e;
}

IncidenceElement epsilon_bar(PosetPtr p) {
  IncidenceElement e(std::move(p));
  const Poset& poset = e.poset();
  for (int id = 0; id < poset.interval_count(); ++id) {
    const auto& [s, t] = poset.interval(id);
    e.at_id(id) = (s == t) ? IntPolynomial(-1)
                           : x_minus_one_pow(poset.rho(s, t) - 1);
  }
  return e;
}

namespace {

void check_unit_diagonal(const IncidenceElement& k, const char* who) {
  const Poset& p = k.poset();
  for (int x = 0; x < p.size(); ++x)
    if (k.at(x, x) != IntPolynomial(1))
      throw NotAKernel(std::string(who) + ": diagonal at " + p.label(x) +
                       " is " + k.at(x, x).to_string() + ", expected 1");
}

// Shared skeleton of the two KLS recursions.  For each interval in
// increasing-rank order, accumulate q, verify q^rev = -q, and read the
// strict lower half of -q off as the new entry.
IncidenceElement kls_solve(const IncidenceElement& kernel, bool right) {
  check_unit_diagonal(kernel, right ? "kls_right" : "kls_left");
  const Poset& p = kernel.poset();
  IncidenceElement out(kernel.poset_ptr());
  for (int id = 0; id < p.interval_count(); ++id) {
    const auto& [s, t] = p.interval(id);
    if (s == t) {
      out.at_id(id) = 1;
      continue;
    }
    int rho = p.rho(s, t);
    IntPolynomial q;
    for (int w : p.between(id)) {
      if (right && w != s) q += kernel.at(s, w) * out.at(w, t);
      if (!right && w != t) q += out.at(s, w) * kernel.at(w, t);
    }
    if (poly_rev(q, rho) != -q)
      throw AntisymmetryViolation(
          std::string(right ? "kls_right" : "kls_left") + ": at [" +
          p.label(s) + "," + p.label(t) + "] q = " + q.to_string() +
          " is not rev-antisymmetric; the input is not a valid kernel");
    std::vector<mpz_class> coeffs;
    for (int i = 0; 2 * i < rho; ++i) coeffs.push_back(-q.coeff(i));
    out.at_id(id) = IntPolynomial(std::move(coeffs));
  }
  return out;
}

}  // namespace

IncidenceElement kls_right(const IncidenceElement& kernel) {
  return kls_solve(kernel, true);
}

IncidenceElement kls_left(const IncidenceElement& kernel) {
  return kls_solve(kernel, false);
}

IncidenceElement z_function(const IncidenceElement& kernel) {
  IncidenceElement f = kls_right(kernel);
  IncidenceElement g = kls_left(kernel);
  IncidenceElement z = convolve(rev_element(g), f);
  IncidenceElement z2 = convolve(g, rev_element(f));
  if (!(z == z2)) {
    const Poset& p = kernel.poset();
    for (int id = 0; id < p.interval_count(); ++id)
      if (z.at_id(id) != z2.at_id(id)) {
        const auto& [s, t] = p.interval(id);
        throw FormulaMismatch("z_function: g^rev*f != g*f^rev at [" +
                              p.label(s) + "," + p.label(t) + "]: " +
                              z.at_id(id).to_string() + " vs " +
                              z2.at_id(id).to_string());
      }
  }
  return z;
}

IncidenceElement toric_h(PosetPtr p) {
  IncidenceElement g = kls_left(eulerian_kernel(p));
  const Poset& poset = g.poset();
  IncidenceElement h(g.poset_ptr());
  for (int id = 0; id < poset.interval_count(); ++id) {
    const auto& [s, t] = poset.interval(id);
    h.at_id(id) =
        poly_div_x_minus_1(poly_rev(g.at_id(id), poset.rho(s, t)) - g.at_id(id));
  }
  return h;
}

IncidenceElement chow_function(PosetPtr p) {
  IncidenceElement inv = invert(epsilon_bar(std::move(p)));
  IncidenceElement out(inv.poset_ptr());
  for (int id = 0; id < inv.poset().interval_count(); ++id)
    out.at_id(id) = -inv.at_id(id);
  return out;
}

IntPolynomial chow_via_zeta_oracle(const Poset& p) {
  int r = p.rank();
  int top_degree = std::max(r - 1, 0);
  auto zeta = zeta_poly_values(p, r + 1);
  std::vector<mpz_class> coeffs(top_degree + 1);
  for (int j = 0; j <= top_degree; ++j) {
    mpz_class acc = 0;
    for (int k = 0; k <= j; ++k) {
      mpz_class term = binomial(r + 1, j - k) * zeta[k + 1];
      if ((j - k) % 2 != 0) term = -term;
      acc += term;
    }
    coeffs[j] = std::move(acc);
  }
  return IntPolynomial(std::move(coeffs));
}

BeToric be_toric(PosetPtr p, Truncation trunc) {
  const Poset& poset = *p;
  BeToric out{IncidenceElement(p), IncidenceElement(p)};
  for (int id = 0; id < poset.interval_count(); ++id) {
    const auto& [s, t] = poset.interval(id);
    if (s == t) {
      out.g.at_id(id) = 1;
      out.h.at_id(id) = 1;
      continue;
    }
    IntPolynomial h;
    for (int w : poset.between(id))
      if (w != t) h += out.g.at(s, w) * x_minus_one_pow(poset.rho(w, t) - 1);
    int rho = poset.rho(s, t);
    int bound = (trunc == Truncation::Paper) ? rho / 2 : (rho - 1) / 2;
    IntPolynomial g =
        ((IntPolynomial(1) - IntPolynomial::monomial(1, 1)) * h).truncated(bound);
    out.h.at_id(id) = std::move(h);
    out.g.at_id(id) = std::move(g);
  }
  return out;
}

IncidenceElement be_z(PosetPtr p, Truncation trunc) {
  IncidenceElement g = be_toric(p, trunc).g;
  IncidenceElement gdual = be_toric(dual(*p), trunc).g;
  IncidenceElement f(p);
  for (int id = 0; id < p->interval_count(); ++id) {
    const auto& [s, t] = p->interval(id);
    f.at_id(id) = gdual.at(t, s);
  }
  return convolve(rev_element(g), f);
}

}  // namespace kls
