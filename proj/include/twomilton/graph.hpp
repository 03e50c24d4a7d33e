#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace twomilton {

/// Vertex subset of a graph on at most 64 vertices; bit v set means vertex v.
using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr Mask bit(int v) { return Mask{1} << v; }
constexpr int popcount(Mask m) { return std::popcount(m); }
constexpr int lowest(Mask m) { return std::countr_zero(m); }
constexpr Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }

std::vector<int> to_vector(Mask m);
Mask to_mask(std::span<const int> vertices);

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with one adjacency bit row per
/// vertex. Adding an edge twice keeps one copy.
class UGraph {
 public:
  UGraph() = default;
  explicit UGraph(int n);

  int order() const { return static_cast<int>(adj_.size()); }
  Mask all() const { return full_mask(order()); }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  /// Removes every edge at v; v stays as an isolated vertex.
  void isolate(int v);

  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
  Mask neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }
  int edge_count() const;
  int max_degree() const;
  int min_degree() const;
  std::vector<Edge> edges() const;

  /// True when the subgraph induced on `within` is connected (vacuously true
  /// for the empty set).
  bool connected(Mask within) const;
  bool is_connected() const { return connected(all()); }
  /// Connected components of the subgraph induced on `within`, ordered by
  /// their smallest vertex.
  std::vector<Mask> components(Mask within) const;

  bool is_independent(Mask s) const;
  bool is_clique(Mask s) const;

  /// Subgraph induced on `keep`, relabeled to 0..|keep|-1 in increasing id
  /// order. `original` (if given) receives the new->old id map.
  UGraph induced(Mask keep, std::vector<int>* original = nullptr) const;
  /// Graph with vertex v renamed to perm[v].
  UGraph relabel(std::span<const int> perm) const;

  bool operator==(const UGraph&) const = default;

 private:
  std::vector<Mask> adj_;
};

/// Hamiltonian cycle on 0..n-1 stored as its cyclic visiting order.
class HamCycle {
 public:
  HamCycle() = default;

  int order() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& sequence() const { return order_; }
  std::vector<Edge> edges() const;
  UGraph to_graph() const;
  HamCycle relabel(std::span<const int> perm) const;

  bool operator==(const HamCycle&) const = default;

 private:
  friend HamCycle make_cycle(int n, std::vector<int> order);
  explicit HamCycle(std::vector<int> order) : order_(std::move(order)) {}
  std::vector<int> order_;
};

/// Validating constructor; throws InvalidInput on n < 3, wrong length,
/// out-of-range or repeated vertices.
HamCycle make_cycle(int n, std::vector<int> order);

/// The identity cycle 0,1,...,n-1.
HamCycle standard_cycle(int n);

/// Edge-set union of two cycles on the same vertex set.
UGraph graph_union(const HamCycle& a, const HamCycle& b);

/// Dihedral-canonical representative: the image that starts at 0 and whose
/// second entry is smaller than its last. Equal keys iff equal edge sets.
struct CanonicalCycleKey {
  std::vector<int> key;
  auto operator<=>(const CanonicalCycleKey&) const = default;
};

CanonicalCycleKey canonical_key(const HamCycle& c);
HamCycle from_key(const CanonicalCycleKey& k);

std::string to_string(const HamCycle& c);

}  // namespace twomilton
