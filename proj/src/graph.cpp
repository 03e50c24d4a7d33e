#include "twomilton/graph.hpp"

#include <algorithm>
#include <sstream>

#include "twomilton/errors.hpp"

namespace twomilton {

std::vector<int> to_vector(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  for (; m != 0; m &= m - 1) out.push_back(lowest(m));
  return out;
}

Mask to_mask(std::span<const int> vertices) {
  Mask m = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw InvalidInput("vertex id out of range: " + std::to_string(v));
    m |= bit(v);
  }
  return m;
}

UGraph::UGraph(int n) {
  if (n < 0 || n > kMaxVertices)
    throw LimitExceeded("graphs are limited to " + std::to_string(kMaxVertices) + " vertices, got " +
                        std::to_string(n));
  adj_.assign(static_cast<std::size_t>(n), 0);
}

void UGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= order() || v >= order())
    throw InvalidInput("edge endpoint out of range");
  if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void UGraph::remove_edge(int u, int v) {
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

void UGraph::isolate(int v) {
  for (int w : to_vector(adj_[v])) adj_[w] &= ~bit(v);
  adj_[v] = 0;
}

int UGraph::edge_count() const {
  int twice = 0;
  for (Mask row : adj_) twice += popcount(row);
  return twice / 2;
}

int UGraph::max_degree() const {
  int d = 0;
  for (Mask row : adj_) d = std::max(d, popcount(row));
  return d;
}

int UGraph::min_degree() const {
  if (adj_.empty()) return 0;
  int d = kMaxVertices;
  for (Mask row : adj_) d = std::min(d, popcount(row));
  return d;
}

std::vector<Edge> UGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u)
    for (int v : to_vector(adj_[u] & ~full_mask(u + 1))) out.emplace_back(u, v);
  return out;
}

bool UGraph::connected(Mask within) const {
  if (within == 0) return true;
  Mask seen = bit(lowest(within));
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask f = frontier; f != 0; f &= f - 1) next |= adj_[lowest(f)];
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == within;
}

std::vector<Mask> UGraph::components(Mask within) const {
  std::vector<Mask> out;
  Mask left = within;
  while (left != 0) {
    Mask seen = bit(lowest(left));
    Mask frontier = seen;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= adj_[lowest(f)];
      next &= left & ~seen;
      seen |= next;
      frontier = next;
    }
    out.push_back(seen);
    left &= ~seen;
  }
  return out;
}

bool UGraph::is_independent(Mask s) const {
  for (Mask t = s; t != 0; t &= t - 1)
    if (adj_[lowest(t)] & s) return false;
  return true;
}

bool UGraph::is_clique(Mask s) const {
  for (Mask t = s; t != 0; t &= t - 1) {
    int v = lowest(t);
    if (((adj_[v] | bit(v)) & s) != s) return false;
  }
  return true;
}

UGraph UGraph::induced(Mask keep, std::vector<int>* original) const {
  std::vector<int> old_ids = to_vector(keep & all());
  std::vector<int> new_id(adj_.size(), -1);
  for (std::size_t i = 0; i < old_ids.size(); ++i) new_id[old_ids[i]] = static_cast<int>(i);
  UGraph h(static_cast<int>(old_ids.size()));
  for (std::size_t i = 0; i < old_ids.size(); ++i)
    for (int w : to_vector(adj_[old_ids[i]] & keep))
      if (new_id[w] > static_cast<int>(i)) h.add_edge(static_cast<int>(i), new_id[w]);
  if (original) *original = std::move(old_ids);
  return h;
}

UGraph UGraph::relabel(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != order()) throw InvalidInput("permutation size mismatch");
  UGraph h(order());
  for (auto [u, v] : edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

std::vector<Edge> HamCycle::edges() const {
  std::vector<Edge> out;
  const int n = order();
  for (int i = 0; i < n; ++i) {
    int a = order_[i], b = order_[(i + 1) % n];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

UGraph HamCycle::to_graph() const {
  UGraph g(order());
  const int n = order();
  for (int i = 0; i < n; ++i) g.add_edge(order_[i], order_[(i + 1) % n]);
  return g;
}

HamCycle HamCycle::relabel(std::span<const int> perm) const {
  std::vector<int> seq(order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) seq[i] = perm[order_[i]];
  return make_cycle(order(), std::move(seq));
}

HamCycle make_cycle(int n, std::vector<int> order) {
  if (n < 3) throw InvalidInput("a Hamiltonian cycle needs n >= 3, got " + std::to_string(n));
  if (static_cast<int>(order.size()) != n)
    throw InvalidInput("cycle has " + std::to_string(order.size()) + " entries, expected " +
                       std::to_string(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : order) {
    if (v < 0 || v >= n) throw InvalidInput("vertex id " + std::to_string(v) + " out of range");
    if (seen[v]) throw InvalidInput("duplicate vertex " + std::to_string(v) + " in cycle");
    seen[v] = 1;
  }
  return HamCycle(std::move(order));
}

HamCycle standard_cycle(int n) {
  std::vector<int> seq(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) seq[i] = i;
  return make_cycle(n, std::move(seq));
}

UGraph graph_union(const HamCycle& a, const HamCycle& b) {
  if (a.order() != b.order())
    throw InvalidInput("cannot unite cycles on " + std::to_string(a.order()) + " and " +
                       std::to_string(b.order()) + " vertices");
  UGraph g = a.to_graph();
  for (auto [u, v] : b.edges()) g.add_edge(u, v);
  return g;
}

CanonicalCycleKey canonical_key(const HamCycle& c) {
  const auto& seq = c.sequence();
  const int n = c.order();
  int start = static_cast<int>(std::find(seq.begin(), seq.end(), 0) - seq.begin());
  int step = seq[(start + 1) % n] < seq[(start + n - 1) % n] ? 1 : n - 1;
  CanonicalCycleKey k;
  k.key.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) k.key[i] = seq[(start + static_cast<long>(i) * step) % n];
  return k;
}

HamCycle from_key(const CanonicalCycleKey& k) {
  return make_cycle(static_cast<int>(k.key.size()), k.key);
}

std::string to_string(const HamCycle& c) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c.sequence().size(); ++i) os << (i ? "," : "") << c.sequence()[i];
  os << ']';
  return os.str();
}

}  // namespace twomilton
