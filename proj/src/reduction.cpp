#include "twomilton/reduction.hpp"

#include <algorithm>
#include <numeric>

#include "twomilton/errors.hpp"
#include "twomilton/family_io.hpp"
#include "twomilton/random.hpp"

namespace twomilton {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string describe(Mask m) {
  std::string s = "{";
  for (int v : to_vector(m)) s += (s.size() > 1 ? "," : "") + std::to_string(v);
  return s + "}";
}

class Pipeline {
 public:
  Pipeline(const UGraph& g, std::vector<std::vector<int>> cycles, bool diagnostic)
      : w_(g), alive_(g.all()), cycles_(std::move(cycles)), diagnostic_(diagnostic) {
    r_.g = g;
    r_.diagnostic = diagnostic;
  }

  ReductionResult run() {
    step_small();
    step_connect();
    step_three();
    step_rest();
    r_.h = w_.induced(alive_, &r_.h_to_g);
    r_.trace = std::move(trace_);
    return std::move(r_);
  }

  ReductionResult& result() { return r_; }

 private:
  void violation(std::string what) { r_.violations.push_back(std::move(what)); }

  void remove(const Archipelago& k, int step) {
    for (int v : to_vector(k.vertices)) w_.isolate(v);
    alive_ &= ~k.vertices;
    for (auto& c : cycles_)
      c.erase(std::remove_if(c.begin(), c.end(), [&](int v) { return (k.vertices & bit(v)) != 0; }), c.end());
    r_.lift_plan.push_back({step, k.vertices, k.k4s});
    r_.removed_k4s.insert(r_.removed_k4s.end(), k.k4s.begin(), k.k4s.end());
  }

  void add(int step, Mask removed, int u, int v) {
    if (u > v) std::swap(u, v);
    if (edge_would_create_k4(w_, u, v))
      violation("step " + std::to_string(step) + ": edge " + std::to_string(u) + "-" + std::to_string(v) +
                " creates a K4");
    w_.add_edge(u, v);
    trace_.push_back({step, removed, Edge{u, v}});
  }

  // First pair of `nb` whose edge completes no K4.
  std::optional<Edge> safe_pair(Mask nb) const {
    auto vs = to_vector(nb);
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (!edge_would_create_k4(w_, vs[i], vs[j])) return Edge{vs[i], vs[j]};
    return std::nullopt;
  }

  bool cycles_match_graph() const {
    UGraph u(w_.order());
    for (const auto& c : cycles_)
      if (c.size() >= 2)
        for (std::size_t i = 0; i < c.size(); ++i) u.add_edge(c[i], c[(i + 1) % c.size()]);
    return u == w_;
  }

  void step_small() {
    for (;;) {
      auto arcs = archipelagos(w_, alive_);
      auto it = std::find_if(arcs.begin(), arcs.end(), [](const Archipelago& k) { return k.small; });
      if (it == arcs.end()) return;
      auto nb = to_vector(it->neighborhood);
      Archipelago k = *it;
      remove(k, 1);
      add(1, k.vertices, nb[0], nb[1]);
      if (!cycles_.empty() && !cycles_match_graph())
        violation("step 1: deleting " + describe(k.vertices) + " breaks the two-cycle decomposition");
    }
  }

  void step_connect() {
    auto arcs = archipelagos(w_, alive_);
    Mask k4v = 0;
    for (const auto& k : arcs) k4v |= k.vertices;
    Mask rest = alive_ & ~k4v;
    auto comps = w_.components(rest);
    if (comps.size() <= 1) return;
    std::vector<int> comp_of(static_cast<std::size_t>(w_.order()), -1);
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (int v : to_vector(comps[i])) comp_of[v] = static_cast<int>(i);
    auto arch_of = [&](int v) -> const Archipelago* {
      for (const auto& k : arcs)
        if (k.vertices & bit(v)) return &k;
      return nullptr;
    };
    UnionFind uf(comps.size());
    Mask deleted = 0;
    auto join = [&](int u, int x, const Archipelago& k) {
      if (!(deleted & k.vertices)) {
        remove(k, 2);
        deleted |= k.vertices;
      }
      add(2, k.vertices, u, x);
    };

    if (!diagnostic_) {
      const auto h1 = cycles_[0];
      std::vector<std::size_t> pos;
      for (std::size_t i = 0; i < h1.size(); ++i)
        if (rest & bit(h1[i])) pos.push_back(i);
      for (std::size_t t = 0; t < pos.size(); ++t) {
        std::size_t i = pos[t], j = pos[(t + 1) % pos.size()];
        std::size_t gap = (j + h1.size() - i) % h1.size();
        if (gap <= 1) continue;
        int u = h1[i], x = h1[j];
        if (!uf.unite(comp_of[u], comp_of[x])) continue;
        join(u, x, *arch_of(h1[(i + 1) % h1.size()]));
      }
    } else {
      for (const auto& k : arcs) {
        auto nb = to_vector(k.neighborhood & rest);
        for (std::size_t t = 1; t < nb.size(); ++t)
          if (uf.unite(comp_of[nb[0]], comp_of[nb[t]])) join(nb[0], nb[t], k);
      }
    }
    for (std::size_t i = 1; i < comps.size(); ++i)
      if (uf.find(i) != uf.find(0)) {
        violation("step 2: the K4-free part stays disconnected");
        break;
      }
  }

  void step_three() {
    for (;;) {
      auto arcs = archipelagos(w_, alive_);
      std::vector<const Archipelago*> cands;
      for (const auto& k : arcs)
        if (!k.cyclic && k.neighborhood_independent && popcount(k.neighborhood) == 3) cands.push_back(&k);
      if (cands.empty()) return;
      for (auto* k : cands)
        if (k->risk.kind == RiskClass::forbidden)
          violation("step 3: forbidden archipelago " + describe(k->vertices));
      const Archipelago* pick = nullptr;
      for (auto* k : cands)
        if (k->risk.kind != RiskClass::none && k->risk.kind != RiskClass::forbidden) {
          pick = k;
          break;
        }
      if (pick) {
        Archipelago k = *pick;
        remove(k, 3);
        add(3, k.vertices, k.risk.a, k.risk.b);
        continue;
      }
      Archipelago k = *cands.front();
      remove(k, 3);
      if (auto e = safe_pair(k.neighborhood)) {
        add(3, k.vertices, e->first, e->second);
      } else {
        violation("step 3: every pair in N" + describe(k.vertices) + " completes a K4");
        trace_.push_back({3, k.vertices, std::nullopt});
      }
    }
  }

  void step_rest() {
    for (;;) {
      auto arcs = archipelagos(w_, alive_);
      auto it = std::find_if(arcs.begin(), arcs.end(),
                             [](const Archipelago& k) { return !k.cyclic && k.neighborhood_independent; });
      if (it == arcs.end()) break;
      Archipelago k = *it;
      if (popcount(k.neighborhood) < 4)
        violation("step 4: acyclic archipelago " + describe(k.vertices) + " has an independent neighbourhood of size " +
                  std::to_string(popcount(k.neighborhood)));
      remove(k, 4);
      if (popcount(k.neighborhood) < 2) {
        trace_.push_back({4, k.vertices, std::nullopt});
      } else if (auto e = safe_pair(k.neighborhood)) {
        add(4, k.vertices, e->first, e->second);
      } else {
        violation("step 4: every pair in N" + describe(k.vertices) + " completes a K4");
        trace_.push_back({4, k.vertices, std::nullopt});
      }
    }
    for (const auto& k : archipelagos(w_, alive_)) {
      remove(k, 4);
      trace_.push_back({4, k.vertices, std::nullopt});
    }
  }

  UGraph w_;
  Mask alive_;
  std::vector<std::vector<int>> cycles_;
  bool diagnostic_;
  ReductionResult r_;
  std::vector<TraceEntry> trace_;
};

}  // namespace

ReductionResult technical_reduce(const HamCycle& c1, const HamCycle& c2) {
  if (c1.order() != c2.order()) throw InvalidInput("technical_reduce: cycles have different orders");
  if (c1.order() <= 13) throw InvalidInput("technical_reduce needs n > 13");
  Pipeline p(graph_union(c1, c2), {c1.sequence(), c2.sequence()}, false);
  ReductionResult r = p.run();
  r.cycles = {c1, c2};
  if (!r.violations.empty()) throw Falsification("technical_reduce: " + r.violations.front(), reduction_reproducer(r));
  return r;
}

ReductionResult technical_reduce_diagnostic(const UGraph& g) {
  if (g.max_degree() > 4) throw InvalidInput("technical_reduce_diagnostic needs maximum degree at most 4");
  Pipeline p(g, {}, true);
  try {
    return p.run();
  } catch (const InvalidInput& e) {
    // Overlapping K4s: archipelagos are undefined, so nothing is reduced.
    ReductionResult r;
    r.g = g;
    r.diagnostic = true;
    r.h = g;
    r.h_to_g.resize(static_cast<std::size_t>(g.order()));
    std::iota(r.h_to_g.begin(), r.h_to_g.end(), 0);
    r.violations.push_back(e.what());
    return r;
  }
}

std::optional<Mask> find_transversal(const UGraph& g, const LiftBlock& block, Mask blocked) {
  // Visit K4s along the archipelago so that conflicts surface early.
  std::vector<int> order;
  std::vector<bool> used(block.k4s.size(), false);
  for (std::size_t s = 0; s < block.k4s.size(); ++s) {
    if (used[s]) continue;
    std::vector<int> queue{static_cast<int>(s)};
    used[s] = true;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int q = queue[qi];
      order.push_back(q);
      Mask reach = 0;
      for (int v : block.k4s[q]) reach |= g.neighbors(v);
      for (std::size_t t = 0; t < block.k4s.size(); ++t)
        if (!used[t] && (reach & to_mask(block.k4s[t]))) {
          used[t] = true;
          queue.push_back(static_cast<int>(t));
        }
    }
  }
  Mask chosen = 0;
  auto dfs = [&](auto&& self, std::size_t idx, Mask banned) -> bool {
    if (idx == order.size()) return true;
    for (int v : block.k4s[order[idx]]) {
      if (banned & bit(v)) continue;
      chosen |= bit(v);
      if (self(self, idx + 1, banned | g.neighbors(v))) return true;
      chosen &= ~bit(v);
    }
    return false;
  };
  if (!dfs(dfs, 0, blocked)) return std::nullopt;
  return chosen;
}

IndepCertificate lift_independent(const ReductionResult& r, const IndepCertificate& i) {
  for (int v : i.vertices)
    if (v < 0 || v >= r.h.order()) throw InvalidInput("lift_independent: vertex out of range");
  if (!r.h.is_independent(i.mask())) throw InvalidInput("lift_independent: set is not independent in h");
  Mask in_g = 0;
  for (int v : i.vertices) in_g |= bit(r.h_to_g[v]);
  Mask blocked = 0;
  for (int v : to_vector(in_g)) blocked |= r.g.neighbors(v) | bit(v);
  Mask out = in_g;
  for (const auto& block : r.lift_plan) {
    auto t = find_transversal(r.g, block, blocked);
    if (!t)
      throw Falsification("lift_independent: no transversal for archipelago " + describe(block.vertices),
                          reduction_reproducer(r));
    out |= *t;
    for (int v : to_vector(*t)) blocked |= r.g.neighbors(v) | bit(v);
  }
  return IndepCertificate::of(out);
}

UGraph replay_trace(const UGraph& g, const std::vector<TraceEntry>& trace, std::vector<int>* h_to_g) {
  UGraph w = g;
  Mask alive = g.all();
  for (const auto& e : trace) {
    for (int v : to_vector(e.removed & alive)) w.isolate(v);
    alive &= ~e.removed;
    if (e.added) w.add_edge(e.added->first, e.added->second);
  }
  return w.induced(alive, h_to_g);
}

PostconditionReport check_postconditions(const ReductionResult& r, int exhaustive_nbhd, int samples,
                                         std::uint64_t seed) {
  PostconditionReport rep;
  const UGraph& h = r.h;
  rep.connected = h.order() == 0 || h.is_connected();
  if (!rep.connected) rep.failures.push_back("h is disconnected");
  rep.k4_free = find_k4s(h).empty();
  if (!rep.k4_free) rep.failures.push_back("h contains a K4");
  rep.degree_dominated = true;
  bool dropped = false;
  for (int v = 0; v < h.order(); ++v) {
    int dg = r.g.degree(r.h_to_g[v]);
    if (h.degree(v) > dg) rep.degree_dominated = false;
    if (h.degree(v) < dg) dropped = true;
  }
  if (!rep.degree_dominated) rep.failures.push_back("some degree grew");
  rep.strict_drop = dropped || h.order() == 0 || find_k4s(r.g).empty();
  if (!rep.strict_drop) rep.failures.push_back("no degree dropped although g has a K4");

  std::vector<int> replay_map;
  UGraph replayed = replay_trace(r.g, r.trace, &replay_map);
  rep.replay_matches = replayed == h && replay_map == r.h_to_g;
  if (!rep.replay_matches) rep.failures.push_back("trace replay differs from h");

  std::vector<int> g_to_h(static_cast<std::size_t>(r.g.order()), -1);
  for (int v = 0; v < h.order(); ++v) g_to_h[r.h_to_g[v]] = v;
  rep.lift_property = true;
  Rng rng(seed);
  for (const auto& block : r.lift_plan) {
    Mask nb = 0;
    for (int v : to_vector(block.vertices)) nb |= r.g.neighbors(v);
    nb &= ~block.vertices;
    std::vector<int> nbv;
    for (int v : to_vector(nb))
      if (g_to_h[v] >= 0) nbv.push_back(v);
    if (nbv.size() != static_cast<std::size_t>(popcount(nb))) {
      rep.lift_property = false;
      rep.failures.push_back("deleted archipelago " + describe(block.vertices) + " touches another deleted block");
      continue;
    }
    auto check = [&](Mask s) {
      Mask blocked = 0;
      for (int v : to_vector(s)) blocked |= r.g.neighbors(v) | bit(v);
      ++rep.lift_cases;
      if (!find_transversal(r.g, block, blocked)) {
        rep.lift_property = false;
        rep.failures.push_back("no transversal of " + describe(block.vertices) + " avoids " + describe(s));
        return false;
      }
      return true;
    };
    auto indep_h = [&](Mask s_g, int v) {
      for (int u : to_vector(s_g))
        if (h.has_edge(g_to_h[u], g_to_h[v])) return false;
      return true;
    };
    if (static_cast<int>(nbv.size()) <= exhaustive_nbhd) {
      bool ok = true;
      auto rec = [&](auto&& self, std::size_t idx, Mask s) -> void {
        if (!ok) return;
        if (idx == nbv.size()) {
          ok = check(s);
          return;
        }
        self(self, idx + 1, s);
        if (indep_h(s, nbv[idx])) self(self, idx + 1, s | bit(nbv[idx]));
      };
      rec(rec, 0, 0);
    } else {
      for (int t = 0; t < samples; ++t) {
        auto perm = nbv;
        rng.shuffle(perm);
        Mask s = 0;
        for (int v : perm)
          if (rng.chance(1, 2) && indep_h(s, v)) s |= bit(v);
        if (!check(s)) break;
      }
    }
  }
  return rep;
}

nlohmann::json trace_to_json(const std::vector<TraceEntry>& trace) {
  auto out = nlohmann::json::array();
  for (const auto& e : trace) {
    nlohmann::json j;
    j["step"] = e.step;
    j["removed"] = to_json(to_vector(e.removed));
    j["added"] = e.added ? nlohmann::json::array({e.added->first, e.added->second}) : nlohmann::json::array();
    out.push_back(std::move(j));
  }
  return out;
}

std::string reduction_reproducer(const ReductionResult& r) {
  FamilyDocument doc;
  doc.n = r.g.order();
  doc.cycles = r.cycles;
  if (r.cycles.empty()) doc.edges = r.g.edges();
  doc.header["kind"] = "technical-reduce";
  doc.header["mode"] = r.diagnostic ? "diagnostic" : "strict";
  doc.certificates["trace"] = trace_to_json(r.trace);
  doc.certificates["violations"] = r.violations;
  return serialize_family(doc);
}

}  // namespace twomilton
