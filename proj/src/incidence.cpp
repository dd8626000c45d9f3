#include "kls/incidence.hpp"

namespace kls {

IncidenceElement delta_element(PosetPtr p) {
  IncidenceElement e(std::move(p));
  for (int x = 0; x < e.poset().size(); ++x) e.at(x, x) = 1;
  return e;
}

IncidenceElement zeta_element(PosetPtr p) {
  IncidenceElement e(std::move(p));
  for (int id = 0; id < e.poset().interval_count(); ++id) e.at_id(id) = 1;
  return e;
}

IncidenceElement mobius_table(PosetPtr p) {
  auto mu = mobius_numbers(*p);
  IncidenceElement e(std::move(p));
  for (int id = 0; id < e.poset().interval_count(); ++id)
    e.at_id(id) = IntPolynomial({mu[id]});
  return e;
}

IncidenceElement convolve(const IncidenceElement& a,
                          const IncidenceElement& b) {
  if (&a.poset() != &b.poset())
    throw PosetMismatch("convolve: elements live on different posets");
  const Poset& p = a.poset();
  IncidenceElement out(a.poset_ptr());
  for (int id = 0; id < p.interval_count(); ++id) {
    const auto& [s, t] = p.interval(id);
    IntPolynomial acc;
    for (int w : p.between(id)) acc += a.at(s, w) * b.at(w, t);
    out.at_id(id) = std::move(acc);
  }
  return out;
}

IncidenceElement invert(const IncidenceElement& a) {
  const Poset& p = a.poset();
  IncidenceElement b(a.poset_ptr());
  // Diagonals must be constant +-1; then b_st is determined bottom-up
  // by b_st = -a_tt * sum_{s<=w<t} b_sw a_wt.
  for (int x = 0; x < p.size(); ++x) {
    const IntPolynomial& d = a.at(x, x);
    if (d.degree() != 0 || (d.coeff(0) != 1 && d.coeff(0) != -1))
      throw NonUnitDiagonal("invert: diagonal at " + p.label(x) + " is " +
                            d.to_string());
  }
  for (int id = 0; id < p.interval_count(); ++id) {
    const auto& [s, t] = p.interval(id);
    if (s == t) {
      b.at_id(id) = a.at(t, t);
      continue;
    }
    IntPolynomial acc;
    for (int w : p.between(id))
      if (w != t) acc += b.at(s, w) * a.at(w, t);
    acc = a.at(t, t).coeff(0) == 1 ? -acc : std::move(acc);
    b.at_id(id) = std::move(acc);
  }
  return b;
}

IncidenceElement rev_element(const IncidenceElement& a) {
  const Poset& p = a.poset();
  IncidenceElement out(a.poset_ptr());
  for (int id = 0; id < p.interval_count(); ++id) {
    const auto& [s, t] = p.interval(id);
    int rho = p.rho(s, t);
    if (a.at_id(id).degree() > rho)
      throw DegreeExceeded("rev_element: deg > rho at [" + p.label(s) + "," +
                           p.label(t) + "]");
    out.at_id(id) = poly_rev(a.at_id(id), rho);
  }
  return out;
}

bool is_kernel(const IncidenceElement& k) {
  const Poset& p = k.poset();
  for (int x = 0; x < p.size(); ++x)
    if (k.at(x, x) != IntPolynomial(1)) return false;
  return convolve(k, rev_element(k)) == delta_element(k.poset_ptr());
}

}  // namespace kls
