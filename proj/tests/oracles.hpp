#pragma once

// Brute-force reference implementations. They share nothing with the library
// beyond the graph container, and they are only fast enough for small inputs.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "twomilton/graph.hpp"

namespace oracle {

using twomilton::HamCycle;
using twomilton::Mask;
using twomilton::UGraph;

inline bool independent(const UGraph& g, Mask s) {
  for (int v = 0; v < g.order(); ++v)
    if ((s >> v & 1U) && (g.neighbors(v) & s)) return false;
  return true;
}

/// Maximum over all 2^n subsets.
inline int alpha(const UGraph& g) {
  const int n = g.order();
  int best = 0;
  for (Mask s = 0; s < (Mask{1} << n); ++s)
    if (std::popcount(s) > best && independent(g, s)) best = std::popcount(s);
  return best;
}

inline std::vector<std::vector<int>> k4s(const UGraph& g) {
  std::vector<std::vector<int>> out;
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(a, d) && g.has_edge(b, c) && g.has_edge(b, d) &&
              g.has_edge(c, d))
            out.push_back({a, b, c, d});
  return out;
}

/// Edge-set identity of a cycle: its sorted edge list.
inline std::vector<std::pair<int, int>> edge_set(const HamCycle& c) {
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : c.edges()) e.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(e.begin(), e.end());
  return e;
}

/// All distinct Hamiltonian cycles on n vertices, from every permutation.
inline std::vector<HamCycle> all_cycles(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<HamCycle> out;
  do {
    HamCycle c = twomilton::make_cycle(n, perm);
    if (seen.insert(edge_set(c)).second) out.push_back(c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Induced paths on four vertices, as vertex masks.
inline std::vector<Mask> induced_p4_masks(const UGraph& g) {
  std::vector<Mask> out;
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          int v[4] = {a, b, c, d};
          int edges = 0, deg[4] = {0, 0, 0, 0};
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (g.has_edge(v[i], v[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
              }
          std::sort(deg, deg + 4);
          Mask m = twomilton::bit(a) | twomilton::bit(b) | twomilton::bit(c) | twomilton::bit(d);
          if (edges == 3 && deg[0] == 1 && deg[1] == 1 && deg[2] == 2 && deg[3] == 2 && g.connected(m))
            out.push_back(m);
        }
  return out;
}

/// Largest set of pairwise disjoint masks, by plain recursion.
inline int max_disjoint(const std::vector<Mask>& items) {
  int best = 0;
  std::function<void(std::size_t, Mask, int)> go = [&](std::size_t i, Mask used, int count) {
    best = std::max(best, count);
    if (i == items.size()) return;
    if (count + static_cast<int>(items.size() - i) <= best) return;
    if (!(items[i] & used)) go(i + 1, used | items[i], count + 1);
    go(i + 1, used, count);
  };
  go(0, 0, 0);
  return best;
}

inline int psi(const UGraph& g) { return max_disjoint(induced_p4_masks(g)); }

/// Whether V(g) splits into disjoint cliques of size s.
inline bool clique_partition(const UGraph& g, int s) {
  const int n = g.order();
  if (n % s) return false;
  std::function<bool(Mask)> go = [&](Mask left) {
    if (!left) return true;
    int v = std::countr_zero(left);
    std::function<bool(Mask, Mask)> grow = [&](Mask block, Mask cand) {
      if (std::popcount(block) == s) return go(left & ~block);
      for (Mask c = cand; c; c &= c - 1) {
        int u = std::countr_zero(c);
        if (grow(block | twomilton::bit(u), cand & g.neighbors(u) & ~((twomilton::bit(u) << 1) - 1))) return true;
      }
      return false;
    };
    return grow(twomilton::bit(v), left & g.neighbors(v));
  };
  return go(g.all());
}

/// Largest family of cycles with pairwise α(union) <= k, by plain recursion
/// over candidate sets; only for n <= 6, where there are at most 60 cycles.
inline int f_value(int n, int k) {
  auto cycles = all_cycles(n);
  const int m = static_cast<int>(cycles.size());
  std::vector<Mask> ok(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (alpha(twomilton::graph_union(cycles[i], cycles[j])) <= k) {
        ok[i] |= twomilton::bit(j);
        ok[j] |= twomilton::bit(i);
      }
  int best = 0;
  std::function<void(Mask, int)> go = [&](Mask cand, int size) {
    best = std::max(best, size);
    while (cand) {
      if (size + std::popcount(cand) <= best) return;
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      go(cand & ok[v], size + 1);
    }
  };
  go(twomilton::full_mask(m), 0);
  return best;
}

}  // namespace oracle
