#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "twomilton/graph.hpp"
#include "twomilton/random.hpp"

namespace twomilton {

HamCycle random_cycle(int n, Rng& rng);

/// Two independent uniform cycles.
std::pair<HamCycle, HamCycle> random_pair(int n, Rng& rng);

/// A uniform first cycle and a second cycle that turns disjoint runs of four
/// consecutive first-cycle vertices into K4s. The K4 count is drawn from
/// [0, max_blocks]; each K4's outer ends are often tied back to its
/// first-cycle neighbours, which produces small archipelagos and
/// 3-vertex neighbourhoods.
std::pair<HamCycle, HamCycle> planted_pair(int n, Rng& rng, int max_blocks);

/// Random connected K4-free graph with maximum degree at most 4: a random
/// spanning tree of degree at most 4, then random extra edges that keep both
/// properties, stopping at a random target edge count.
UGraph random_k4free_graph(int n, Rng& rng);

/// Sets of ceil(x·n) elements of [n], drawn by rejection so that pairwise
/// intersections stay at most (1-ε)x²n.
struct SetSystem {
  int ground = 0;
  long long x_num = 1, x_den = 1;
  long long eps_num = 1, eps_den = 1;
  std::vector<std::vector<int>> sets;
};

SetSystem random_set_system(Rng& rng, int max_ground = 200);

/// Three cycles C, D1, D2 where D1 and D2 share a planted set of K4s with C.
struct CycleTriple {
  HamCycle c, d1, d2;
};

CycleTriple random_triple(int n, Rng& rng);

}  // namespace twomilton
