#pragma once

#include <vector>

#include "kls/polynomial.hpp"
#include "kls/poset.hpp"

namespace kls {

// An element of the incidence algebra: one integer polynomial per
// closed interval of a poset, stored flat by interval id.  Immutable by
// convention once an operation has returned it.
class IncidenceElement {
 public:
  explicit IncidenceElement(PosetPtr poset)
      : poset_(std::move(poset)), table_(poset_->interval_count()) {}

  const Poset& poset() const { return *poset_; }
  const PosetPtr& poset_ptr() const { return poset_; }

  const IntPolynomial& at(int s, int t) const {
    return table_[poset_->interval_id(s, t)];
  }
  IntPolynomial& at(int s, int t) { return table_[poset_->interval_id(s, t)]; }
  const IntPolynomial& at_id(int id) const { return table_[id]; }
  IntPolynomial& at_id(int id) { return table_[id]; }

  bool operator==(const IncidenceElement& o) const {
    return poset_.get() == o.poset_.get() && table_ == o.table_;
  }

 private:
  PosetPtr poset_;
  std::vector<IntPolynomial> table_;
};

// delta: 1 on the diagonal, 0 elsewhere.
IncidenceElement delta_element(PosetPtr p);

// zeta: 1 on every interval.
IncidenceElement zeta_element(PosetPtr p);

// Mobius function as constant polynomials (direct integer recursion,
// independent of the generic inversion path).
IncidenceElement mobius_table(PosetPtr p);

// (ab)_st = sum over s <= w <= t of a_sw b_wt.  Throws PosetMismatch.
IncidenceElement convolve(const IncidenceElement& a,
                          const IncidenceElement& b);

// Two-sided inverse; requires every diagonal to be constant +1 or -1,
// else NonUnitDiagonal.
IncidenceElement invert(const IncidenceElement& a);

// Entrywise coefficient reversal with degree bound rho_st.  Throws
// DegreeExceeded naming the offending interval when a is not in the
// degree-bounded subalgebra.
IncidenceElement rev_element(const IncidenceElement& a);

// k_ss = 1 everywhere and k * k^rev = delta.
bool is_kernel(const IncidenceElement& k);

}  // namespace kls
