#include "kls/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace kls {

PosetPtr build_poset(const std::vector<std::pair<int, int>>& covers, int n,
                     std::vector<std::string> labels, std::string name) {
  if (n < 1) throw NotBounded("build_poset: empty element set");
  for (const auto& [a, b] : covers) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw ParameterOutOfRange("build_poset: cover id out of [0," +
                                std::to_string(n) + ")");
    if (a == b) throw CycleDetected("build_poset: self-loop at " +
                                    std::to_string(a));
  }

  std::vector<std::vector<int>> up(n);
  std::vector<int> indeg(n, 0);
  for (const auto& [a, b] : covers) {
    up[a].push_back(b);
    ++indeg[b];
  }

  // Kahn toposort; doubles as the cycle check.
  std::vector<int> topo;
  topo.reserve(n);
  for (int x = 0; x < n; ++x)
    if (indeg[x] == 0) topo.push_back(x);
  for (size_t head = 0; head < topo.size(); ++head) {
    int x = topo[head];
    for (int y : up[x])
      if (--indeg[y] == 0) topo.push_back(y);
  }
  if (static_cast<int>(topo.size()) != n)
    throw CycleDetected("build_poset: cover digraph has a cycle");

  auto p = std::shared_ptr<Poset>(new Poset());
  p->n_ = n;
  p->name = std::move(name);
  p->leq_.assign(static_cast<size_t>(n) * n, 0);
  auto leq_at = [&](int s, int t) -> uint8_t& {
    return p->leq_[static_cast<size_t>(s) * n + t];
  };

  // Transitive closure, processed against the topological order.
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int x = *it;
    leq_at(x, x) = 1;
    for (int y : up[x])
      for (int t = 0; t < n; ++t)
        if (leq_at(y, t)) leq_at(x, t) = 1;
  }

  for (int x = 0; x < n; ++x) {
    bool is_bottom = true, is_top = true;
    for (int t = 0; t < n; ++t) {
      if (!leq_at(x, t)) is_bottom = false;
      if (!leq_at(t, x)) is_top = false;
    }
    if (is_bottom) p->bottom_ = x;
    if (is_top) p->top_ = x;
  }
  if (p->bottom_ < 0 || p->top_ < 0)
    throw NotBounded("build_poset: no unique minimum/maximum element");

  // True cover pairs from the closure (drops redundant input edges).
  p->covers_.clear();
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (s == t || !leq_at(s, t)) continue;
      bool is_cover = true;
      for (int w = 0; w < n && is_cover; ++w)
        if (w != s && w != t && leq_at(s, w) && leq_at(w, t)) is_cover = false;
      if (is_cover) p->covers_.emplace_back(s, t);
    }
  std::sort(p->covers_.begin(), p->covers_.end());

  // Longest chain from the bottom; graded iff every cover steps by one.
  p->rank_.assign(n, 0);
  for (int x : topo)
    for (int y : up[x])
      p->rank_[y] = std::max(p->rank_[y], p->rank_[x] + 1);
  for (const auto& [s, t] : p->covers_)
    if (p->rank_[t] != p->rank_[s] + 1)
      throw NotGraded("build_poset: cover " + std::to_string(s) + " < " +
                      std::to_string(t) + " skips ranks " +
                      std::to_string(p->rank_[s]) + " -> " +
                      std::to_string(p->rank_[t]));

  if (labels.empty()) {
    labels.resize(n);
    for (int x = 0; x < n; ++x) labels[x] = std::to_string(x);
  } else if (static_cast<int>(labels.size()) != n) {
    throw ParameterOutOfRange("build_poset: label count != n");
  }
  p->labels_ = std::move(labels);

  p->linext_.resize(n);
  std::iota(p->linext_.begin(), p->linext_.end(), 0);
  std::stable_sort(p->linext_.begin(), p->linext_.end(),
                   [&](int a, int b) { return p->rank_[a] < p->rank_[b]; });

  // Interval index: ids sorted by (rho, s, t).
  p->interval_id_.assign(static_cast<size_t>(n) * n, -1);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (leq_at(s, t)) p->intervals_.emplace_back(s, t);
  std::sort(p->intervals_.begin(), p->intervals_.end(),
            [&](const auto& a, const auto& b) {
              int ra = p->rank_[a.second] - p->rank_[a.first];
              int rb = p->rank_[b.second] - p->rank_[b.first];
              return std::tie(ra, a.first, a.second) <
                     std::tie(rb, b.first, b.second);
            });
  for (size_t id = 0; id < p->intervals_.size(); ++id) {
    const auto& [s, t] = p->intervals_[id];
    p->interval_id_[static_cast<size_t>(s) * n + t] = static_cast<int>(id);
  }
  p->between_.resize(p->intervals_.size());
  for (size_t id = 0; id < p->intervals_.size(); ++id) {
    const auto& [s, t] = p->intervals_[id];
    for (int w : p->linext_)
      if (leq_at(s, w) && leq_at(w, t)) p->between_[id].push_back(w);
  }

  return p;
}

PosetPtr dual(const Poset& p) {
  std::vector<std::pair<int, int>> covers;
  covers.reserve(p.cover_pairs().size());
  for (const auto& [s, t] : p.cover_pairs()) covers.emplace_back(t, s);
  return build_poset(covers, p.size(), p.labels(), "dual(" + p.name + ")");
}

PosetPtr direct_product(const Poset& p, const Poset& q) {
  int np = p.size(), nq = q.size();
  auto id = [&](int a, int b) { return a * nq + b; };
  std::vector<std::pair<int, int>> covers;
  std::vector<std::string> labels(static_cast<size_t>(np) * nq);
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < nq; ++b)
      labels[id(a, b)] = "(" + p.label(a) + "," + q.label(b) + ")";
  for (const auto& [s, t] : p.cover_pairs())
    for (int b = 0; b < nq; ++b) covers.emplace_back(id(s, b), id(t, b));
  for (const auto& [s, t] : q.cover_pairs())
    for (int a = 0; a < np; ++a) covers.emplace_back(id(a, s), id(a, t));
  return build_poset(covers, np * nq, std::move(labels),
                     "product(" + p.name + "," + q.name + ")");
}

std::vector<mpz_class> mobius_numbers(const Poset& p) {
  std::vector<mpz_class> mu(p.interval_count());
  for (int id = 0; id < p.interval_count(); ++id) {
    const auto& [s, t] = p.interval(id);
    if (s == t) {
      mu[id] = 1;
      continue;
    }
    mpz_class acc = 0;
    for (int w : p.between(id))
      if (w != t) acc += mu[p.interval_id(s, w)];
    mu[id] = -acc;
  }
  return mu;
}

bool is_eulerian(const Poset& p) {
  auto mu = mobius_numbers(p);
  for (int id = 0; id < p.interval_count(); ++id) {
    const auto& [s, t] = p.interval(id);
    if (mu[id] != (p.rho(s, t) % 2 == 0 ? 1 : -1)) return false;
  }
  return true;
}

namespace {

// Unique minimal element among the common bounds, scanning candidates
// in rank order; two incomparable minimal candidates mean no join/meet.
bool unique_extremum(const Poset& p, int x, int y, bool upper) {
  int found = -1;
  for (int w : p.linext()) {
    bool bound = upper ? (p.leq(x, w) && p.leq(y, w))
                       : (p.leq(w, x) && p.leq(w, y));
    if (!bound) continue;
    if (found < 0) {
      found = w;
    } else if (upper ? !p.leq(found, w) : !p.leq(w, found)) {
      return false;
    }
  }
  return found >= 0;
}

}  // namespace

bool is_lattice(const Poset& p) {
  for (int x = 0; x < p.size(); ++x)
    for (int y = x + 1; y < p.size(); ++y)
      if (!unique_extremum(p, x, y, true) || !unique_extremum(p, x, y, false))
        return false;
  return true;
}

namespace {

// Iterated up/down color refinement; returns per-element colors.
std::vector<int> refine_colors(const Poset& p) {
  int n = p.size();
  std::vector<int> updeg(n, 0), downdeg(n, 0);
  for (const auto& [s, t] : p.cover_pairs()) {
    ++updeg[s];
    ++downdeg[t];
  }
  std::vector<int> color(n);
  {
    std::map<std::tuple<int, int, int>, int> palette;
    for (int x = 0; x < n; ++x) {
      auto key = std::make_tuple(p.rank_of(x), updeg[x], downdeg[x]);
      auto [it, _] = palette.try_emplace(key, static_cast<int>(palette.size()));
      color[x] = it->second;
    }
  }
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> ups(n), downs(n);
    for (const auto& [s, t] : p.cover_pairs()) {
      ups[s].push_back(color[t]);
      downs[t].push_back(color[s]);
    }
    std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> palette;
    std::vector<int> next(n);
    for (int x = 0; x < n; ++x) {
      std::sort(ups[x].begin(), ups[x].end());
      std::sort(downs[x].begin(), downs[x].end());
      auto key = std::make_tuple(color[x], std::move(ups[x]), std::move(downs[x]));
      auto [it, _] = palette.try_emplace(std::move(key),
                                         static_cast<int>(palette.size()));
      next[x] = it->second;
    }
    bool stable = static_cast<int>(palette.size()) ==
                  *std::max_element(color.begin(), color.end()) + 1;
    color = std::move(next);
    if (stable) break;
  }
  return color;
}

bool extend_isomorphism(const Poset& p, const Poset& q,
                        const std::vector<int>& order,
                        const std::vector<int>& cp, const std::vector<int>& cq,
                        std::vector<int>& map, std::vector<char>& used,
                        size_t pos) {
  if (pos == order.size()) return true;
  int x = order[pos];
  for (int y = 0; y < q.size(); ++y) {
    if (used[y] || cq[y] != cp[x]) continue;
    bool ok = true;
    for (size_t k = 0; k < pos && ok; ++k) {
      int a = order[k];
      if (p.leq(a, x) != q.leq(map[a], y) || p.leq(x, a) != q.leq(y, map[a]))
        ok = false;
    }
    if (!ok) continue;
    map[x] = y;
    used[y] = 1;
    if (extend_isomorphism(p, q, order, cp, cq, map, used, pos + 1))
      return true;
    used[y] = 0;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const Poset& p, const Poset& q) {
  if (p.size() > 64 || q.size() > 64)
    throw TooLarge("is_isomorphic: supported up to 64 elements");
  if (p.size() != q.size() || p.rank() != q.rank() ||
      p.cover_pairs().size() != q.cover_pairs().size())
    return false;

  auto cp = refine_colors(p), cq = refine_colors(q);
  {
    auto sp = cp, sq = cq;
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    if (sp != sq) return false;
  }

  // Most-constrained-first: rarer colors early.
  std::vector<int> freq(p.size() + 1, 0);
  for (int c : cp) ++freq[c];
  std::vector<int> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::make_pair(freq[cp[a]], cp[a]) <
           std::make_pair(freq[cp[b]], cp[b]);
  });

  std::vector<int> map(p.size(), -1);
  std::vector<char> used(q.size(), 0);
  return extend_isomorphism(p, q, order, cp, cq, map, used, 0);
}

std::vector<mpz_class> zeta_poly_values(const Poset& p, int n_max) {
  if (n_max < 1) throw ParameterOutOfRange("zeta_poly_values: n_max >= 1");
  std::vector<mpz_class> out(n_max + 1);
  out[0] = 0;
  // u[t] = number of multichains bottom <= w_1 <= ... <= w_{k-1} <= t;
  // one prefix-sum sweep per power of the all-ones element.
  std::vector<mpz_class> u(p.size(), 1);
  out[1] = 1;
  for (int k = 2; k <= n_max; ++k) {
    std::vector<mpz_class> next(p.size());
    for (int t = 0; t < p.size(); ++t) {
      mpz_class acc = 0;
      for (int w = 0; w < p.size(); ++w)
        if (p.leq(w, t)) acc += u[w];
      next[t] = std::move(acc);
    }
    u = std::move(next);
    out[k] = u[p.top()];
  }
  return out;
}

std::vector<mpz_class> chain_counts(const Poset& p) {
  std::vector<mpz_class> out;
  out.emplace_back(1);
  std::vector<int> proper;
  for (int x : p.linext())
    if (x != p.bottom() && x != p.top()) proper.push_back(x);
  std::vector<mpz_class> ways(p.size(), 0);
  for (int x : proper) ways[x] = 1;
  while (true) {
    mpz_class total = 0;
    for (int x : proper) total += ways[x];
    if (total == 0) break;
    out.push_back(total);
    // Extend every chain by a strictly larger proper element.
    std::vector<mpz_class> next(p.size(), 0);
    for (int x : proper)
      for (int y : proper)
        if (p.less(x, y)) next[y] += ways[x];
    ways = std::move(next);
  }
  return out;
}

}  // namespace kls
