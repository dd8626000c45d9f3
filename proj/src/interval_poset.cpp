#include "kls/interval_poset.hpp"

#include <algorithm>
#include <tuple>

namespace kls {

IntervalPoset interval_poset(PosetPtr base) {
  const Poset& p = *base;
  int r = p.rank();

  // Rank in the interval poset: climb from the bottom [0,1] by
  // shrinking; rho_hat([s,t]) = rho(bottom,s) + rho(t,top).
  auto rho_hat = [&](int s, int t) {
    return p.rank_of(s) + (r - p.rank_of(t));
  };

  std::vector<std::tuple<int, int, int>> keys;  // (rank, s, t)
  keys.reserve(p.interval_count());
  for (int id = 0; id < p.interval_count(); ++id) {
    const auto& [s, t] = p.interval(id);
    keys.emplace_back(rho_hat(s, t), s, t);
  }
  std::sort(keys.begin(), keys.end());

  IntervalPoset ip;
  ip.base = base;
  ip.element_of.assign(p.interval_count(), -1);
  std::vector<std::string> labels;
  for (const auto& [rk, s, t] : keys) {
    (void)rk;
    ip.element_of[p.interval_id(s, t)] = static_cast<int>(ip.origin.size());
    ip.origin.emplace_back(s, t);
    labels.push_back("[" + p.label(s) + "," + p.label(t) + "]");
  }
  ip.empty_element = static_cast<int>(ip.origin.size());
  ip.origin.push_back(Interval::empty());
  labels.push_back("∅");

  std::vector<std::pair<int, int>> covers;
  for (int id = 0; id < p.interval_count(); ++id) {
    const auto& [s, t] = p.interval(id);
    int e = ip.element_of[id];
    if (s == t) covers.emplace_back(e, ip.empty_element);
    // Shrink the right endpoint: t' covered by t.
    for (const auto& [a, b] : p.cover_pairs()) {
      if (b == t && p.leq(s, a))
        covers.emplace_back(e, ip.element_of[p.interval_id(s, a)]);
      if (a == s && p.leq(b, t))
        covers.emplace_back(e, ip.element_of[p.interval_id(b, t)]);
    }
  }

  ip.poset = build_poset(covers, static_cast<int>(ip.origin.size()),
                         std::move(labels), "interval_poset(" + p.name + ")");
  return ip;
}

}  // namespace kls
