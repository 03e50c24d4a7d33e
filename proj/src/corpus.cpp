#include "twomilton/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "twomilton/errors.hpp"
#include "twomilton/k4.hpp"

namespace twomilton {

namespace {

std::vector<int> iota_vec(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Start positions of disjoint 4-windows of a cyclic sequence, each keeping a
// free position on both sides.
std::vector<int> choose_windows(int n, int count, Rng& rng) {
  std::vector<int> starts = iota_vec(n);
  rng.shuffle(starts);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<int> out;
  for (int s : starts) {
    if (static_cast<int>(out.size()) >= count) break;
    bool free = true;
    for (int d = -1; d <= 4; ++d) free = free && !used[(s + d + n) % n];
    if (!free) continue;
    for (int d = 0; d < 4; ++d) used[(s + d) % n] = true;
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Second cycle through the K4 paths of the given windows of `seq`. glue[i]:
// 0 none, 1 both first-cycle neighbours attached, 2 left only, 3 right only.
std::vector<int> build_partner(const std::vector<int>& seq, const std::vector<int>& windows,
                               const std::vector<int>& glue, Rng& rng) {
  const int n = static_cast<int>(seq.size());
  std::vector<bool> claimed(static_cast<std::size_t>(n), false);
  for (int s : windows)
    for (int d = 0; d < 4; ++d) claimed[seq[(s + d) % n]] = true;
  std::vector<std::vector<int>> units;
  for (std::size_t w = 0; w < windows.size(); ++w) {
    int s = windows[w];
    auto at = [&](int d) { return seq[((s + d) % n + n) % n]; };
    std::vector<int> unit{at(2), at(0), at(3), at(1)};
    int x = at(-1), y = at(4);
    bool left = (glue[w] == 1 || glue[w] == 2) && !claimed[x];
    if (left) claimed[x] = true;
    bool right = (glue[w] == 1 || glue[w] == 3) && !claimed[y];
    if (right) claimed[y] = true;
    if (left) unit.insert(unit.begin(), x);
    if (right) unit.push_back(y);
    units.push_back(std::move(unit));
  }
  for (int v = 0; v < n; ++v)
    if (!claimed[v]) units.push_back({v});
  rng.shuffle(units);
  std::vector<int> order;
  for (auto& u : units) {
    if (rng.chance(1, 2)) std::reverse(u.begin(), u.end());
    order.insert(order.end(), u.begin(), u.end());
  }
  return order;
}

}  // namespace

HamCycle random_cycle(int n, Rng& rng) {
  auto order = iota_vec(n);
  rng.shuffle(order);
  return make_cycle(n, std::move(order));
}

std::pair<HamCycle, HamCycle> random_pair(int n, Rng& rng) {
  HamCycle a = random_cycle(n, rng);
  HamCycle b = random_cycle(n, rng);
  return {a, b};
}

std::pair<HamCycle, HamCycle> planted_pair(int n, Rng& rng, int max_blocks) {
  if (n < 6) throw InvalidInput("planted_pair needs n >= 6");
  HamCycle c1 = random_cycle(n, rng);
  int count = rng.range(0, std::max(0, max_blocks));
  auto windows = choose_windows(n, count, rng);
  std::vector<int> glue;
  for (std::size_t i = 0; i < windows.size(); ++i) glue.push_back(static_cast<int>(rng.below(4)));
  return {c1, make_cycle(n, build_partner(c1.sequence(), windows, glue, rng))};
}

UGraph random_k4free_graph(int n, Rng& rng) {
  if (n < 1 || n > kMaxVertices) throw InvalidInput("random_k4free_graph: n out of range");
  UGraph g(n);
  auto order = iota_vec(n);
  rng.shuffle(order);
  for (int i = 1; i < n; ++i) {
    int v = order[i];
    for (;;) {
      int u = order[rng.below(static_cast<std::uint64_t>(i))];
      if (g.degree(u) < 4) {
        g.add_edge(u, v);
        break;
      }
    }
  }
  int extra = rng.range(0, n + 1);
  for (int tries = 0; extra > 0 && tries < 40 * n; ++tries) {
    int u = static_cast<int>(rng.below(n)), v = static_cast<int>(rng.below(n));
    if (u == v || g.has_edge(u, v) || g.degree(u) >= 4 || g.degree(v) >= 4) continue;
    if (edge_would_create_k4(g, u, v)) continue;
    g.add_edge(u, v);
    --extra;
  }
  return g;
}

SetSystem random_set_system(Rng& rng, int max_ground) {
  static constexpr long long xs[][2] = {{1, 5}, {1, 4}, {1, 3}, {1, 2}, {2, 3}};
  static constexpr long long es[][2] = {{1, 10}, {1, 5}, {1, 4}, {1, 3}, {1, 2}};
  SetSystem s;
  s.ground = rng.range(10, std::max(10, max_ground));
  const auto& x = xs[rng.below(5)];
  const auto& e = es[rng.below(5)];
  s.x_num = x[0], s.x_den = x[1], s.eps_num = e[0], s.eps_den = e[1];
  const long long n = s.ground;
  const int size = static_cast<int>((s.x_num * n + s.x_den - 1) / s.x_den);
  // Largest intersection t with t <= (1-ε)x²n, i.e. t·den <= num.
  const long long num = (s.eps_den - s.eps_num) * s.x_num * s.x_num * n;
  const long long den = s.eps_den * s.x_den * s.x_den;
  const long long cap = num / den;
  auto ground = iota_vec(s.ground);
  std::vector<std::vector<bool>> members;
  for (int attempt = 0; attempt < 400; ++attempt) {
    rng.shuffle(ground);
    std::vector<int> set(ground.begin(), ground.begin() + size);
    std::vector<bool> in(static_cast<std::size_t>(s.ground), false);
    for (int v : set) in[v] = true;
    bool ok = true;
    for (const auto& m : members) {
      long long common = 0;
      for (int v : set) common += m[v];
      if (common > cap) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::sort(set.begin(), set.end());
    members.push_back(std::move(in));
    s.sets.push_back(std::move(set));
  }
  return s;
}

CycleTriple random_triple(int n, Rng& rng) {
  if (n < 6) throw InvalidInput("random_triple needs n >= 6");
  HamCycle c = random_cycle(n, rng);
  auto windows = choose_windows(n, rng.range(0, n / 5), rng);
  std::vector<int> glue(windows.size(), 0);
  HamCycle d1 = make_cycle(n, build_partner(c.sequence(), windows, glue, rng));
  HamCycle d2 = make_cycle(n, build_partner(c.sequence(), windows, glue, rng));
  return {c, d1, d2};
}

}  // namespace twomilton
