#include "twomilton/independence.hpp"

#include <algorithm>
#include <unordered_map>

#include "twomilton/errors.hpp"
#include "twomilton/limits.hpp"

namespace twomilton {

namespace {

// v may be taken into some maximum independent set when its neighbourhood
// inside p is empty, a single vertex, or a clique.
bool forced_in(const UGraph& g, int v, Mask p) {
  Mask nb = g.neighbors(v) & p;
  return popcount(nb) <= 1 || g.is_clique(nb);
}

// Alternate vertices of a connected 2-regular subgraph.
Mask cycle_alternate(const UGraph& g, Mask p) {
  int start = lowest(p);
  Mask taken = 0;
  int prev = -1, cur = start;
  int len = popcount(p);
  for (int i = 0; i < len; ++i) {
    if (i % 2 == 0 && i + 1 < len) taken |= bit(cur);
    Mask nb = g.neighbors(cur) & p;
    int next = lowest(nb);
    if (next == prev) next = lowest(nb & ~bit(next));
    prev = cur;
    cur = next;
  }
  return taken;
}

class ExactSolver {
 public:
  explicit ExactSolver(const UGraph& g) : g_(g) {}

  Mask solve(Mask p) {
    Mask forced = 0;
    for (bool changed = true; changed && p != 0;) {
      changed = false;
      for (Mask t = p; t != 0; t &= t - 1) {
        int v = lowest(t);
        if (!(p & bit(v))) continue;
        if (forced_in(g_, v, p)) {
          forced |= bit(v);
          p &= ~(g_.neighbors(v) | bit(v));
          changed = true;
        }
      }
    }
    if (p == 0) return forced;
    if (auto it = memo_.find(p); it != memo_.end()) return forced | it->second;

    Mask best = 0;
    auto comps = g_.components(p);
    if (comps.size() > 1) {
      for (Mask c : comps) best |= solve(c);
    } else {
      int v = -1, dv = -1;
      for (Mask t = p; t != 0; t &= t - 1) {
        int u = lowest(t);
        int du = popcount(g_.neighbors(u) & p);
        if (du > dv) v = u, dv = du;
      }
      if (dv <= 2) {
        best = cycle_alternate(g_, p);
      } else {
        Mask with = bit(v) | solve(p & ~(g_.neighbors(v) | bit(v)));
        Mask without = solve(p & ~bit(v));
        best = popcount(with) >= popcount(without) ? with : without;
      }
    }
    if (memo_.size() > kMemoCap) memo_.clear();
    memo_.emplace(p, best);
    return forced | best;
  }

 private:
  static constexpr std::size_t kMemoCap = std::size_t{1} << 22;
  const UGraph& g_;
  std::unordered_map<Mask, Mask> memo_;
};

int clique_cover_bound(const UGraph& g, Mask p) {
  int count = 0;
  while (p != 0) {
    int v = lowest(p);
    Mask clique = bit(v);
    Mask cand = g.neighbors(v) & p;
    for (; cand != 0; cand &= cand - 1) {
      int u = lowest(cand);
      if ((g.neighbors(u) & clique) == clique) clique |= bit(u);
    }
    p &= ~clique;
    ++count;
  }
  return count;
}

std::optional<Mask> threshold_search(const UGraph& g, Mask p, int k) {
  if (k <= 0) return Mask{0};
  Mask forced = 0;
  for (bool changed = true; changed && p != 0 && k > 0;) {
    changed = false;
    for (Mask t = p; t != 0 && k > 0; t &= t - 1) {
      int v = lowest(t);
      if (!(p & bit(v))) continue;
      if (forced_in(g, v, p)) {
        forced |= bit(v);
        p &= ~(g.neighbors(v) | bit(v));
        --k;
        changed = true;
      }
    }
  }
  if (k <= 0) return forced;
  if (popcount(p) < k || clique_cover_bound(g, p) < k) return std::nullopt;
  int v = -1, dv = -1;
  for (Mask t = p; t != 0; t &= t - 1) {
    int u = lowest(t);
    int du = popcount(g.neighbors(u) & p);
    if (du > dv) v = u, dv = du;
  }
  if (auto r = threshold_search(g, p & ~(g.neighbors(v) | bit(v)), k - 1)) return forced | bit(v) | *r;
  if (auto r = threshold_search(g, p & ~bit(v), k)) return forced | *r;
  return std::nullopt;
}

void check_ids(const UGraph& g, const std::vector<int>& vs) {
  for (int v : vs)
    if (v < 0 || v >= g.order()) throw InvalidInput("vertex id " + std::to_string(v) + " out of range");
}

}  // namespace

Mask maximum_independent_set(const UGraph& g, Mask within) {
  ExactSolver solver(g);
  return solver.solve(within & g.all());
}

AlphaResult alpha_exact(const UGraph& g) {
  if (g.order() > limits().alpha_max_n)
    throw LimitExceeded("alpha_exact: n=" + std::to_string(g.order()) + " exceeds limit " +
                        std::to_string(limits().alpha_max_n));
  Mask best = maximum_independent_set(g, g.all());
  AlphaResult r;
  r.size = popcount(best);
  r.certificate = IndepCertificate{to_vector(best), r.size};
  return r;
}

std::optional<Mask> find_independent_set(const UGraph& g, int size, Mask within) {
  if (g.order() > limits().alpha_max_n)
    throw LimitExceeded("independent-set search: n=" + std::to_string(g.order()) + " exceeds limit");
  auto r = threshold_search(g, within & g.all(), size);
  if (!r) return std::nullopt;
  // Forced picks can overshoot by at most the last batch; trim to `size`.
  Mask m = *r;
  while (popcount(m) > size) m &= m - 1;
  return m;
}

bool verify_independent(const UGraph& g, const IndepCertificate& cert) {
  check_ids(g, cert.vertices);
  Mask m = 0;
  for (int v : cert.vertices) {
    if (m & bit(v)) return false;
    m |= bit(v);
  }
  if (!g.is_independent(m)) return false;
  return !cert.claimed_alpha || static_cast<int>(cert.vertices.size()) >= *cert.claimed_alpha;
}

IndepCertificate greedy_extend(const UGraph& g, const IndepCertificate& start) {
  check_ids(g, start.vertices);
  if (start.vertices.empty()) throw InvalidInput("greedy_extend needs a nonempty start set");
  if (g.max_degree() > 4) throw InvalidInput("greedy_extend needs maximum degree at most 4");
  if (!g.is_connected()) throw InvalidInput("greedy_extend needs a connected graph");
  Mask set = start.mask();
  if (!g.is_independent(set)) throw InvalidInput("greedy_extend start set is not independent");
  auto closed = [&](Mask s) {
    Mask c = s;
    for (Mask t = s; t != 0; t &= t - 1) c |= g.neighbors(lowest(t));
    return c;
  };
  Mask covered = closed(set);
  while (covered != g.all()) {
    Mask open = covered & ~set;
    int pick = -1;
    for (Mask t = g.all() & ~covered; t != 0; t &= t - 1) {
      int v = lowest(t);
      if (g.neighbors(v) & open) {
        pick = v;
        break;
      }
    }
    if (pick < 0) throw InvalidInput("greedy_extend: no vertex touches the neighbourhood (graph disconnected)");
    set |= bit(pick);
    covered |= bit(pick) | g.neighbors(pick);
  }
  return IndepCertificate::of(set);
}

bool csoka_eligible(const UGraph& g, int y) {
  if (y < 0 || y >= g.order() || g.degree(y) != 2) return false;
  Mask nb = g.neighbors(y);
  int x = lowest(nb), z = lowest(nb & (nb - 1));
  return !g.has_edge(x, z);
}

std::pair<UGraph, CsokaReduction> csoka_reduce(const UGraph& g, int y) {
  if (y < 0 || y >= g.order()) throw InvalidInput("csoka_reduce: vertex out of range");
  if (g.degree(y) != 2) throw InvalidInput("csoka_reduce: vertex must have exactly two neighbours");
  if (!csoka_eligible(g, y)) throw InvalidInput("csoka_reduce: the two neighbours are adjacent");
  const int n = g.order();
  CsokaReduction red;
  red.y = y;
  red.x = lowest(g.neighbors(y));
  red.z = lowest(g.neighbors(y) & ~bit(red.x));
  red.original_order = n;
  red.to_reduced.assign(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (v == red.x || v == red.y || v == red.z) continue;
    red.to_reduced[v] = next++;
    red.to_original.push_back(v);
  }
  red.merged = next;
  red.to_original.push_back(-1);
  red.to_reduced[red.x] = red.to_reduced[red.z] = red.merged;

  UGraph h(n - 2);
  for (auto [u, v] : g.edges()) {
    int a = red.to_reduced[u], b = red.to_reduced[v];
    if (a < 0 || b < 0 || a == b) continue;
    h.add_edge(a, b);
  }
  return {std::move(h), std::move(red)};
}

IndepCertificate csoka_lift(const CsokaReduction& red, const UGraph& reduced, const IndepCertificate& i_prime) {
  if (!verify_independent(reduced, {i_prime.vertices, std::nullopt}))
    throw InvalidInput("csoka_lift: set is not independent in the reduced graph");
  std::vector<int> out;
  bool has_merged = false;
  for (int v : i_prime.vertices) {
    if (v == red.merged) {
      has_merged = true;
      continue;
    }
    out.push_back(red.to_original[v]);
  }
  if (has_merged) {
    out.push_back(red.x);
    out.push_back(red.z);
  } else {
    out.push_back(red.y);
  }
  std::sort(out.begin(), out.end());
  return {out, std::nullopt};
}

}  // namespace twomilton
