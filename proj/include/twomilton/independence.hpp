#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "twomilton/graph.hpp"

namespace twomilton {

/// A claimed independent set. Nothing about it is trusted until
/// verify_independent() has checked it against a graph.
struct IndepCertificate {
  std::vector<int> vertices;
  std::optional<int> claimed_alpha;

  Mask mask() const { return to_mask(vertices); }
  static IndepCertificate of(Mask m) { return {to_vector(m), std::nullopt}; }
};

struct AlphaResult {
  int size = 0;
  IndepCertificate certificate;
};

/// Exact independence number with a maximum independent set as witness.
/// Throws LimitExceeded above limits().alpha_max_n vertices.
AlphaResult alpha_exact(const UGraph& g);

/// Maximum independent set of the subgraph induced on `within`.
Mask maximum_independent_set(const UGraph& g, Mask within);

/// Early-exit search: an independent set of exactly `size` vertices inside
/// `within`, or nullopt when none exists.
std::optional<Mask> find_independent_set(const UGraph& g, int size, Mask within);
inline bool has_independent_set(const UGraph& g, int size) {
  return find_independent_set(g, size, g.all()).has_value();
}

/// True iff no edge joins two certificate vertices and, when a claim is
/// present, the set has at least claimed_alpha vertices. Throws InvalidInput
/// on out-of-range ids.
bool verify_independent(const UGraph& g, const IndepCertificate& cert);

/// Grows a nonempty independent set in a connected graph with maximum degree
/// at most 4 by repeatedly adding the smallest vertex outside the closed
/// neighbourhood that touches the open neighbourhood. The result has at least
/// |I| + |V \ N[I]| / 4 vertices.
IndepCertificate greedy_extend(const UGraph& g, const IndepCertificate& start);

/// Contraction of a degree-2 vertex y with nonadjacent neighbours x, z into a
/// single merged vertex. In the reduced graph the surviving vertices keep
/// their relative order and the merged vertex takes the last id.
struct CsokaReduction {
  int x = -1, y = -1, z = -1;
  int merged = -1;
  int original_order = 0;
  /// Original vertex -> reduced vertex (x and z map to `merged`, y to -1).
  std::vector<int> to_reduced;
  /// Reduced vertex -> original vertex (`merged` maps to -1).
  std::vector<int> to_original;
};

std::pair<UGraph, CsokaReduction> csoka_reduce(const UGraph& g, int y);

/// Lifts an independent set of the reduced graph to one of the original graph
/// with exactly one more vertex. Throws InvalidInput if `i_prime` is not
/// independent in `reduced`.
IndepCertificate csoka_lift(const CsokaReduction& red, const UGraph& reduced,
                            const IndepCertificate& i_prime);

/// True iff y has exactly two neighbours and they are nonadjacent.
bool csoka_eligible(const UGraph& g, int y);

}  // namespace twomilton
