#pragma once

#include <array>
#include <optional>
#include <vector>

#include "twomilton/graph.hpp"

namespace twomilton {

using Quad = std::array<int, 4>;
using Triple = std::array<int, 3>;

/// Every vertex 4-set inducing K4, each sorted, in lexicographic order.
std::vector<Quad> find_k4s(const UGraph& g);
std::vector<Triple> find_triangles(const UGraph& g);
int zeta(const UGraph& g);

/// True when adding edge uv would complete a K4 through it.
bool edge_would_create_k4(const UGraph& g, int u, int v);

enum class CoverKind { k4, triangle };

struct CoverCertificate {
  CoverKind kind = CoverKind::k4;
  std::vector<std::vector<int>> blocks;
};

/// Blocks partition V(g) and each induces a clique of the kind's size.
bool check_cover(const UGraph& g, const CoverCertificate& cert);
/// Exact backtracking over disjoint cliques; nullopt when no cover exists.
std::optional<CoverCertificate> find_k4_cover(const UGraph& g);
std::optional<CoverCertificate> find_triangle_cover(const UGraph& g);

/// How an acyclic archipelago with an independent 3-vertex neighbourhood
/// {A,B,C} sits among its outside attachments O1, O2. The forbidding pattern
/// has all seven edges A,B,C-O1, A,B,C-O2 and O1-O2; the risky types miss
/// exactly one: type 1 misses O1-O2, type 2 misses B-O1, type 3 misses A-O1.
/// A always denotes a neighbour receiving at least two edges from the
/// archipelago.
enum class RiskClass { none, forbidden, risky_type1, risky_type2, risky_type3 };

struct RiskPattern {
  RiskClass kind = RiskClass::none;
  int a = -1, b = -1, c = -1, o1 = -1, o2 = -1;
};

const char* to_string(RiskClass k);

/// A maximal connected K4-coverable induced subgraph, equivalently a
/// connected component of the subgraph induced on all K4 vertices.
struct Archipelago {
  Mask vertices = 0;
  std::vector<Quad> k4s;
  /// Edges of the archipelago outside every K4 (necessarily a matching).
  std::vector<Edge> matching;
  /// Open neighbourhood inside the alive vertex set.
  Mask neighborhood = 0;
  bool cyclic = false;
  bool neighborhood_independent = false;
  /// Acyclic with an independent neighbourhood of exactly two vertices.
  bool small = false;
  int edges_out = 0;
  RiskPattern risk;
};

/// Archipelagos of the subgraph induced on `alive` (default: all vertices),
/// ordered by smallest vertex. Throws InvalidInput if two K4s share a vertex.
std::vector<Archipelago> archipelagos(const UGraph& g, Mask alive);
inline std::vector<Archipelago> archipelagos(const UGraph& g) { return archipelagos(g, g.all()); }

RiskPattern classify_risk(const UGraph& g, const Archipelago& k, Mask alive);

/// A good subgraph: an induced path a-b-c-d, stored with a < d.
using PathP4 = std::array<int, 4>;

std::vector<PathP4> induced_p4s(const UGraph& g);

struct PsiResult {
  int count = 0;
  std::vector<PathP4> paths;
};

/// Maximum number of vertex-disjoint induced P4s. With `target`, the packing
/// returned is capped at that many paths. Throws LimitExceeded above
/// limits().psi_max_n vertices.
PsiResult psi_exact(const UGraph& g, std::optional<int> target = std::nullopt);

/// Maximum packing of vertex-disjoint paths drawn from `paths`.
PsiResult psi_packing(const UGraph& g, std::vector<PathP4> paths);

/// The inner vertices b, c of the path both have degree 2 in g, which is what
/// the contraction argument needs.
bool csoka_eligible_path(const UGraph& g, const PathP4& p);

}  // namespace twomilton
