#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "kls/errors.hpp"

namespace kls {

class Poset;
using PosetPtr = std::shared_ptr<const Poset>;

// A finite bounded graded poset.
//
// The full order relation is kept as a dense n x n matrix (posets here
// stay small, a few thousand elements at most, and dense lookups
// dominate every algorithm), together with the exact cover list, the
// rank function, and a fixed rank-nondecreasing linear extension.
//
// Construction goes through build_poset(), which computes the
// transitive closure of the cover digraph, rejects cycles, verifies
// boundedness and gradedness, and precomputes the interval index used
// by the incidence-algebra layer:
//
//   - interval_id(s, t) maps a comparable pair to a dense id,
//   - intervals are sorted by (rank difference, s, t), so iterating
//     ids in order resolves every bottom-up recursion,
//   - between(id) lists the elements w with s <= w <= t in linear-
//     extension order.
//
// Instances are immutable after construction and safe to share
// read-only across threads.
class Poset {
 public:
  int size() const { return n_; }
  bool leq(int s, int t) const { return leq_[s * n_ + t] != 0; }
  bool less(int s, int t) const { return s != t && leq(s, t); }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  int rank_of(int x) const { return rank_[x]; }
  // Rank of the whole poset, i.e. of its top element.
  int rank() const { return rank_[top_]; }
  // Rank difference rho(t) - rho(s); only meaningful when s <= t.
  int rho(int s, int t) const { return rank_[t] - rank_[s]; }

  const std::vector<std::pair<int, int>>& cover_pairs() const {
    return covers_;
  }
  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& linext() const { return linext_; }

  int interval_count() const { return static_cast<int>(intervals_.size()); }
  // -1 when s <= t does not hold.
  int interval_id(int s, int t) const { return interval_id_[s * n_ + t]; }
  const std::pair<int, int>& interval(int id) const { return intervals_[id]; }
  const std::vector<int>& between(int id) const { return between_[id]; }

  std::string name;

 private:
  Poset() = default;
  friend PosetPtr build_poset(const std::vector<std::pair<int, int>>& covers,
                              int n, std::vector<std::string> labels,
                              std::string name);

  int n_ = 0;
  int bottom_ = -1;
  int top_ = -1;
  std::vector<uint8_t> leq_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<int> rank_;
  std::vector<std::string> labels_;
  std::vector<int> linext_;
  std::vector<std::pair<int, int>> intervals_;
  std::vector<int> interval_id_;
  std::vector<std::vector<int>> between_;
};

// Builds a bounded graded poset from a cover digraph; each pair means
// "first is covered by second".  Redundant (transitive) input edges are
// absorbed; the stored cover list is recomputed exactly.
//
// Throws ParameterOutOfRange for ids outside [0, n), CycleDetected,
// NotBounded (no unique minimum/maximum), NotGraded (maximal chains of
// unequal length).
PosetPtr build_poset(const std::vector<std::pair<int, int>>& covers, int n,
                     std::vector<std::string> labels = {},
                     std::string name = "");

// Order reversed, ranks complemented; an involution.
PosetPtr dual(const Poset& p);

// Componentwise order on pairs; ranks add.
PosetPtr direct_product(const Poset& p, const Poset& q);

// Mobius numbers indexed by interval id, from the direct recursion
// sum_{s<=w<=t} mu_sw = 0.
std::vector<mpz_class> mobius_numbers(const Poset& p);

// mu_st = (-1)^{rho_st} on every interval.
bool is_eulerian(const Poset& p);

// All meets and joins exist (brute-force bound search).
bool is_lattice(const Poset& p);

// Order isomorphism via rank/degree color refinement plus backtracking.
// Throws TooLarge beyond 64 elements.
bool is_isomorphic(const Poset& p, const Poset& q);

// Entry n (1 <= n <= n_max) counts multichains of n-1 elements; entry 0
// is 0 by convention.  zeta(1) = 1, zeta(2) = |P|.
std::vector<mpz_class> zeta_poly_values(const Poset& p, int n_max);

// Entry i counts strict i-element chains in the proper part; entry 0 is
// 1.  The list stops at the longest proper chain.
std::vector<mpz_class> chain_counts(const Poset& p);

}  // namespace kls
