#pragma once

#include <vector>

#include "kls/poset.hpp"

namespace kls {

// A closed interval [s,t] of a base poset, or the empty interval.
class Interval {
 public:
  static Interval empty() { return Interval(); }
  Interval(int s, int t) : s_(s), t_(t) {}

  bool is_empty() const { return s_ < 0; }
  int s() const { return s_; }
  int t() const { return t_; }

  bool operator==(const Interval& o) const = default;

 private:
  Interval() = default;
  int s_ = -1;
  int t_ = -1;
};

// The poset of all closed intervals of a base poset plus the empty
// interval, ordered by reverse inclusion: [s,t] <= [u,v] iff [u,v] is
// contained in [s,t], with the empty interval on top.  Elements are
// numbered by (rank, s, t) with the empty interval last.
struct IntervalPoset {
  PosetPtr base;
  PosetPtr poset;
  // Per element of `poset`, the base interval it came from.
  std::vector<Interval> origin;
  // Element id of the non-empty interval [s,t]; indexed by the base
  // poset's interval ids.
  std::vector<int> element_of;
  int empty_element = -1;

  int element(int s, int t) const {
    return element_of[base->interval_id(s, t)];
  }
};

// Builds the interval poset.  Covers follow the one-step shrink rule:
// [u,v] is covered by [s,t] iff u = s and t is covered by v, or v = t
// and u is covered by s; singletons are covered by the empty interval.
IntervalPoset interval_poset(PosetPtr base);

}  // namespace kls
