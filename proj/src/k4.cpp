#include "twomilton/k4.hpp"

#include <algorithm>
#include <unordered_map>

#include "twomilton/errors.hpp"
#include "twomilton/limits.hpp"

namespace twomilton {

std::vector<Quad> find_k4s(const UGraph& g) {
  std::vector<Quad> out;
  for (int a = 0; a < g.order(); ++a) {
    Mask up = g.neighbors(a) & ~full_mask(a + 1);
    for (Mask tb = up; tb; tb &= tb - 1) {
      int b = lowest(tb);
      Mask ab = up & g.neighbors(b) & ~full_mask(b + 1);
      for (Mask tc = ab; tc; tc &= tc - 1) {
        int c = lowest(tc);
        Mask abc = ab & g.neighbors(c) & ~full_mask(c + 1);
        for (Mask td = abc; td; td &= td - 1) out.push_back({a, b, c, lowest(td)});
      }
    }
  }
  return out;
}

std::vector<Triple> find_triangles(const UGraph& g) {
  std::vector<Triple> out;
  for (int a = 0; a < g.order(); ++a) {
    Mask up = g.neighbors(a) & ~full_mask(a + 1);
    for (Mask tb = up; tb; tb &= tb - 1) {
      int b = lowest(tb);
      Mask ab = up & g.neighbors(b) & ~full_mask(b + 1);
      for (Mask tc = ab; tc; tc &= tc - 1) out.push_back({a, b, lowest(tc)});
    }
  }
  return out;
}

int zeta(const UGraph& g) { return static_cast<int>(find_k4s(g).size()); }

bool edge_would_create_k4(const UGraph& g, int u, int v) {
  Mask common = g.neighbors(u) & g.neighbors(v);
  for (Mask t = common; t; t &= t - 1)
    if (g.neighbors(lowest(t)) & common) return true;
  return false;
}

namespace {

template <std::size_t K>
bool cover_search(const std::vector<std::vector<Mask>>& by_vertex, Mask left, std::vector<Mask>& chosen) {
  if (left == 0) return true;
  int v = lowest(left);
  for (Mask b : by_vertex[v]) {
    if ((b & left) != b) continue;
    chosen.push_back(b);
    if (cover_search<K>(by_vertex, left & ~b, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

template <std::size_t K, class Blocks>
std::optional<CoverCertificate> find_cover(const UGraph& g, const Blocks& blocks, CoverKind kind) {
  if (g.order() % static_cast<int>(K) != 0) return std::nullopt;
  std::vector<std::vector<Mask>> by_vertex(static_cast<std::size_t>(g.order()));
  for (const auto& b : blocks) by_vertex[b[0]].push_back(to_mask(b));
  std::vector<Mask> chosen;
  if (!cover_search<K>(by_vertex, g.all(), chosen)) return std::nullopt;
  CoverCertificate cert;
  cert.kind = kind;
  for (Mask m : chosen) cert.blocks.push_back(to_vector(m));
  return cert;
}

}  // namespace

bool check_cover(const UGraph& g, const CoverCertificate& cert) {
  const std::size_t size = cert.kind == CoverKind::k4 ? 4 : 3;
  Mask seen = 0;
  for (const auto& block : cert.blocks) {
    if (block.size() != size) return false;
    for (int v : block)
      if (v < 0 || v >= g.order()) return false;
    Mask m = to_mask(block);
    if (popcount(m) != static_cast<int>(size) || (m & seen) || !g.is_clique(m)) return false;
    seen |= m;
  }
  return seen == g.all();
}

std::optional<CoverCertificate> find_k4_cover(const UGraph& g) {
  return find_cover<4>(g, find_k4s(g), CoverKind::k4);
}

std::optional<CoverCertificate> find_triangle_cover(const UGraph& g) {
  return find_cover<3>(g, find_triangles(g), CoverKind::triangle);
}

const char* to_string(RiskClass k) {
  switch (k) {
    case RiskClass::none: return "none";
    case RiskClass::forbidden: return "forbidden";
    case RiskClass::risky_type1: return "risky-type-1";
    case RiskClass::risky_type2: return "risky-type-2";
    case RiskClass::risky_type3: return "risky-type-3";
  }
  return "?";
}

RiskPattern classify_risk(const UGraph& g, const Archipelago& k, Mask alive) {
  RiskPattern none;
  if (k.cyclic || !k.neighborhood_independent || popcount(k.neighborhood) != 3) return none;
  auto nb = to_vector(k.neighborhood);
  int designated = -1;
  for (int v : nb)
    if (popcount(g.neighbors(v) & k.vertices) >= 2) {
      designated = v;
      break;
    }
  std::vector<int> cand;
  for (Mask t = alive & ~k.vertices & ~k.neighborhood; t; t &= t - 1) {
    int o = lowest(t);
    if (popcount(g.neighbors(o) & k.neighborhood) >= 2) cand.push_back(o);
  }
  auto others = [&](int x) {
    std::vector<int> r;
    for (int v : nb)
      if (v != x) r.push_back(v);
    return r;
  };
  std::optional<RiskPattern> risky;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    for (std::size_t j = i + 1; j < cand.size(); ++j) {
      int o1 = cand[i], o2 = cand[j];
      int missing_count = 0;
      int miss_x = -1, miss_o = -1;
      bool miss_oo = !g.has_edge(o1, o2);
      missing_count += miss_oo;
      for (int x : nb)
        for (int o : {o1, o2})
          if (!g.has_edge(x, o)) {
            ++missing_count;
            miss_x = x;
            miss_o = o;
          }
      if (missing_count == 0) {
        int a = designated >= 0 ? designated : nb[0];
        auto bc = others(a);
        return {RiskClass::forbidden, a, bc[0], bc[1], o1, o2};
      }
      if (missing_count != 1 || risky) continue;
      if (miss_oo) {
        int a = designated >= 0 ? designated : nb[0];
        auto bc = others(a);
        risky = RiskPattern{RiskClass::risky_type1, a, bc[0], bc[1], o1, o2};
      } else {
        int other_o = miss_o == o1 ? o2 : o1;
        if (miss_x == designated) {
          auto bc = others(miss_x);
          risky = RiskPattern{RiskClass::risky_type3, miss_x, bc[0], bc[1], miss_o, other_o};
        } else {
          auto rest = others(miss_x);
          int a = designated >= 0 ? designated : rest[0];
          int c = rest[0] == a ? rest[1] : rest[0];
          risky = RiskPattern{RiskClass::risky_type2, a, miss_x, c, miss_o, other_o};
        }
      }
    }
  }
  return risky.value_or(none);
}

std::vector<Archipelago> archipelagos(const UGraph& g, Mask alive) {
  auto quads = find_k4s(g);
  Mask k4_vertices = 0;
  std::vector<Quad> live;
  for (const auto& q : quads) {
    Mask m = to_mask(q);
    if ((m & alive) != m) continue;
    if (m & k4_vertices) throw InvalidInput("K4s sharing a vertex; archipelagos need vertex-disjoint K4s");
    k4_vertices |= m;
    live.push_back(q);
  }
  std::vector<Archipelago> out;
  for (Mask comp : g.components(k4_vertices)) {
    Archipelago k;
    k.vertices = comp;
    for (const auto& q : live)
      if (to_mask(q) & comp) k.k4s.push_back(q);
    auto members = to_vector(comp);
    for (int u : members)
      for (int v : to_vector(g.neighbors(u) & comp & ~full_mask(u + 1))) {
        bool same = false;
        for (const auto& q : k.k4s) {
          Mask qm = to_mask(q);
          if ((qm & bit(u)) && (qm & bit(v))) same = true;
        }
        if (!same) k.matching.emplace_back(u, v);
      }
    for (int u : members) {
      Mask out_nb = g.neighbors(u) & alive & ~comp;
      k.neighborhood |= out_nb;
      k.edges_out += popcount(out_nb);
    }
    k.cyclic = k.matching.size() >= k.k4s.size();
    k.neighborhood_independent = g.is_independent(k.neighborhood);
    k.small = !k.cyclic && popcount(k.neighborhood) == 2 && k.neighborhood_independent;
    k.risk = classify_risk(g, k, alive);
    out.push_back(std::move(k));
  }
  return out;
}

std::vector<PathP4> induced_p4s(const UGraph& g) {
  std::vector<PathP4> out;
  // Enumerate by middle edge b-c, then endpoints a ~ b, d ~ c.
  for (auto [b, c] : g.edges()) {
    for (int orient = 0; orient < 2; ++orient) {
      int bb = orient ? c : b, cc = orient ? b : c;
      Mask as = g.neighbors(bb) & ~g.neighbors(cc) & ~bit(cc);
      Mask ds = g.neighbors(cc) & ~g.neighbors(bb) & ~bit(bb);
      for (Mask ta = as; ta; ta &= ta - 1) {
        int a = lowest(ta);
        for (Mask td = ds & ~g.neighbors(a) & ~bit(a); td; td &= td - 1) {
          int d = lowest(td);
          if (a < d) out.push_back({a, bb, cc, d});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool csoka_eligible_path(const UGraph& g, const PathP4& p) {
  return g.degree(p[1]) == 2 && g.degree(p[2]) == 2;
}

namespace {

class PsiSolver {
 public:
  PsiSolver(const UGraph& g, std::vector<PathP4> paths) : g_(g), paths_(std::move(paths)) {
    by_vertex_.resize(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < paths_.size(); ++i) {
      masks_.push_back(to_mask(paths_[i]));
      by_vertex_[paths_[i][0]].push_back(static_cast<int>(i));
      by_vertex_[paths_[i][1]].push_back(static_cast<int>(i));
      by_vertex_[paths_[i][2]].push_back(static_cast<int>(i));
      by_vertex_[paths_[i][3]].push_back(static_cast<int>(i));
    }
  }

  PsiResult run() {
    Mask avail = normalize(g_.all());
    PsiResult r;
    r.count = value(avail);
    collect(avail, r.paths);
    std::sort(r.paths.begin(), r.paths.end());
    return r;
  }

 private:
  // Drops vertices lying on no path fully inside avail.
  Mask normalize(Mask avail) const {
    for (;;) {
      Mask useful = 0;
      for (Mask t = avail; t; t &= t - 1) {
        int v = lowest(t);
        for (int i : by_vertex_[v])
          if ((masks_[i] & avail) == masks_[i]) {
            useful |= bit(v);
            break;
          }
      }
      if (useful == avail) return avail;
      avail = useful;
    }
  }

  int value(Mask avail) {
    if (popcount(avail) < 4) return 0;
    if (auto it = memo_.find(avail); it != memo_.end()) return it->second;
    auto comps = g_.components(avail);
    int best = 0;
    if (comps.size() > 1) {
      for (Mask c : comps) best += value(c);
    } else {
      int v = lowest(avail);
      best = value(normalize(avail & ~bit(v)));
      int cap = popcount(avail) / 4;
      for (int i : by_vertex_[v]) {
        if (best >= cap) break;
        if ((masks_[i] & avail) != masks_[i]) continue;
        best = std::max(best, 1 + value(normalize(avail & ~masks_[i])));
      }
    }
    memo_.emplace(avail, best);
    return best;
  }

  void collect(Mask avail, std::vector<PathP4>& out) {
    int want = value(avail);
    if (want == 0) return;
    auto comps = g_.components(avail);
    if (comps.size() > 1) {
      for (Mask c : comps) collect(c, out);
      return;
    }
    int v = lowest(avail);
    for (int i : by_vertex_[v]) {
      if ((masks_[i] & avail) != masks_[i]) continue;
      Mask rest = normalize(avail & ~masks_[i]);
      if (1 + value(rest) == want) {
        out.push_back(paths_[i]);
        collect(rest, out);
        return;
      }
    }
    collect(normalize(avail & ~bit(v)), out);
  }

  const UGraph& g_;
  std::vector<PathP4> paths_;
  std::vector<Mask> masks_;
  std::vector<std::vector<int>> by_vertex_;
  std::unordered_map<Mask, int> memo_;
};

}  // namespace

PsiResult psi_packing(const UGraph& g, std::vector<PathP4> paths) {
  if (g.order() > limits().psi_max_n)
    throw LimitExceeded("psi: n=" + std::to_string(g.order()) + " exceeds limit " +
                        std::to_string(limits().psi_max_n));
  PsiSolver solver(g, std::move(paths));
  return solver.run();
}

PsiResult psi_exact(const UGraph& g, std::optional<int> target) {
  if (g.order() > limits().psi_max_n)
    throw LimitExceeded("psi_exact: n=" + std::to_string(g.order()) + " exceeds limit " +
                        std::to_string(limits().psi_max_n));
  auto r = psi_packing(g, induced_p4s(g));
  if (target && r.count > *target) r.paths.resize(static_cast<std::size_t>(*target)), r.count = *target;
  return r;
}

}  // namespace twomilton
