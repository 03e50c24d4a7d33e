#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "twomilton/graph.hpp"

namespace twomilton {

/// Streams every Hamiltonian cycle on n vertices once, as its canonical form
/// (starts at 0, second entry smaller than last), in lexicographic order.
/// With `pinned`, only cycles whose key is smallest within their orbit under
/// the 2n symmetries of the pinned cycle are produced. Throws LimitExceeded
/// above limits().enumerate_max_n.
void enumerate_cycles(int n, const std::optional<HamCycle>& pinned,
                      const std::function<void(const HamCycle&)>& visit);
std::vector<HamCycle> all_cycles(int n, const std::optional<HamCycle>& pinned = std::nullopt);

/// The 2n vertex permutations mapping the cycle onto itself.
std::vector<std::vector<int>> cycle_automorphisms(const HamCycle& c);

struct FilterStats {
  std::uint64_t leaves = 0;
  std::uint64_t pruned_completions = 0;
  std::uint64_t prunes = 0;
  /// (n-1)!/2; leaves + pruned_completions must equal it.
  std::uint64_t expected = 0;
  bool accounted() const { return leaves + pruned_completions == expected; }
};

struct PartnerScan {
  std::vector<HamCycle> partners;  // canonical, sorted by key
  FilterStats stats;
};

/// Every cycle C2 != standard_cycle(n) with α(C_std ∪ C2) <= k. A prefix of
/// C2 is abandoned once the vertices whose neighbourhoods it already fixes
/// hold an independent set of size k+1; the subtree it cuts is counted so the
/// scan stays auditable. `workers` threads split the work by the first two
/// vertices after 0; the result does not depend on the count.
PartnerScan scan_partners(int n, int k, int workers = 1);

/// Reference version that runs the exact test on every enumerated cycle.
PartnerScan scan_partners_naive(int n, int k);

struct FResult {
  int n = 0, k = 0;
  int value = 0;
  bool exhaustive = false;
  std::vector<HamCycle> witness;
  FilterStats stats;
  std::size_t partners = 0;
  std::size_t orbit_representatives = 0;
  std::uint64_t compatibility_checks = 0;
  double seconds = 0;
  nlohmann::json audit = nlohmann::json::array();
};

/// f(n, k). Exhaustive up to limits().exhaustive_f_max_n: the first cycle is
/// pinned (families are closed under relabeling) and the answer is
/// 1 + ω of the compatibility graph on its partners, taken over partner
/// orbit representatives. Above the limit a seeded greedy search gives a
/// lower bound and `exhaustive` is false.
FResult compute_f(int n, int k, int workers = 1, std::uint64_t seed = 1);

struct Exceptional {
  HamCycle c1, c2;
  UGraph g;
  int alpha = 0;
  int zeta = 0;
};

/// A pair of cycles on n in {8, 12} vertices whose union has α = n/4 and
/// ζ = n/4 - 1. Throws InvalidInput for other n and Falsification if none
/// is found.
Exceptional find_exceptional(int n);

/// Cycles C with standard_cycle(n) ∪ C K4-covered, built from the block
/// structure such a union must have: consecutive 4-blocks at one of four
/// offsets, each crossed by C as the path i+2, i, i+3, i+1, with the blocks
/// strung together in any cyclic order and orientations.
std::vector<HamCycle> k4_covered_partners(int n);

struct NoThreeReport {
  int n = 0;
  bool exhaustive = false;
  std::size_t partners = 0;
  std::uint64_t pairs_checked = 0;
  std::optional<std::vector<HamCycle>> triple;
  std::string method;
};

/// Looks for three cycles with every pairwise union K4-covered. The first is
/// pinned to the standard cycle. For n <= 12 the partner list comes from the
/// full scan, for larger n from k4_covered_partners. All partner pairs are
/// tested while there are at most `pair_budget` of them; otherwise
/// `pair_budget` seeded random pairs are.
NoThreeReport verify_nothree(int n, std::uint64_t pair_budget = 2'000'000, std::uint64_t seed = 1);

nlohmann::json to_json(const FilterStats& s);

}  // namespace twomilton
