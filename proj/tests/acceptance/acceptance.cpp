// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "twomilton/bounds.hpp"
#include "twomilton/constructions.hpp"
#include "twomilton/corpus.hpp"
#include "twomilton/independence.hpp"
#include "twomilton/k4.hpp"
#include "twomilton/reduction.hpp"
#include "twomilton/search.hpp"

using namespace twomilton;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

bool is_hamiltonian(const HamCycle& c) {
  std::vector<int> s = c.sequence();
  std::sort(s.begin(), s.end());
  for (int i = 0; i < static_cast<int>(s.size()); ++i)
    if (s[i] != i) return false;
  return c.to_graph().edge_count() == c.order() && c.to_graph().is_connected();
}

std::vector<std::pair<HamCycle, HamCycle>> reduce_corpus(int count, std::uint64_t seed) {
  std::vector<std::pair<HamCycle, HamCycle>> out;
  for (int i = 0; i < count; ++i) {
    Rng rng(seed, {static_cast<std::uint64_t>(i)});
    int n = rng.range(14, 40);
    out.push_back(i % 2 ? random_pair(n, rng) : planted_pair(n, rng, n / 4));
  }
  return out;
}

Outcome c1() {
  auto r = compute_f(4, 1);
  if (!r.exhaustive || r.value != 3) return fail("f(4,1) = " + std::to_string(r.value));
  return {true, "f(4,1) = 3"};
}

Outcome c2() {
  auto t = triple_n8();
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      UGraph g = graph_union(t[i], t[j]);
      if (alpha_exact(g).size != 2) return fail("triple pair alpha != 2");
      auto cover = find_k4_cover(g);
      if (!cover || !check_cover(g, *cover)) return fail("triple pair not K4-covered");
    }
  auto r = compute_f(8, 2);
  if (!r.exhaustive || r.value != 3) return fail("f(8,2) = " + std::to_string(r.value));
  if (r.stats.leaves + r.stats.pruned_completions != 2520 || !r.stats.accounted())
    return fail("enumeration does not account for 2520 cycles");
  return {true, "f(8,2) = 3, 2520 cycles accounted, " + std::to_string(r.partners) + " partners"};
}

Outcome c3() {
  auto r = compute_f(12, 3, 8);
  if (!r.exhaustive || r.value != 2) return fail("f(12,3) = " + std::to_string(r.value));
  if (!r.stats.accounted()) return fail("enumeration not fully accounted");
  return {true, "f(12,3) = 2, " + std::to_string(r.partners) + " partners"};
}

Outcome c4() {
  for (int n : {9, 15, 21}) {
    auto fam = circulant_family(n);
    int pairs = 0;
    for (std::size_t i = 0; i < fam.size(); ++i)
      for (std::size_t j = i + 1; j < fam.size(); ++j) {
        UGraph g = graph_union(fam[i], fam[j]);
        auto cover = find_triangle_cover(g);
        if (!cover || !check_cover(g, *cover)) return fail("n=" + std::to_string(n) + " pair not triangle-covered");
        if (3 * alpha_exact(g).size > n) return fail("n=" + std::to_string(n) + " alpha > n/3");
        ++pairs;
      }
    if (pairs != 10) return fail("expected 10 pairs");
  }
  return {true, "30 unions covered, alpha <= n/3"};
}

Outcome c5() {
  for (const auto& [a, b] : reduce_corpus(100, 2026)) {
    auto r = technical_reduce(a, b);
    auto pc = check_postconditions(r);
    if (!pc.ok()) return fail(pc.failures.front());
    auto ah = alpha_exact(r.h);
    auto lifted = lift_independent(r, ah.certificate);
    if (!verify_independent(r.g, lifted)) return fail("lift is not independent");
  }
  return {true, "100 pairs, all postconditions and lifts hold"};
}

Outcome c6() {
  for (const auto& [a, b] : reduce_corpus(100, 2026)) {
    UGraph g = graph_union(a, b);
    int n = g.order(), z = zeta(g), al = alpha_exact(g).size;
    if (26 * al < 26 * z + 7 * (n - 4 * z) - 4)
      return fail("n=" + std::to_string(n) + " alpha=" + std::to_string(al) + " zeta=" + std::to_string(z));
  }
  return {true, "100 pairs"};
}

Outcome c7() {
  int covered_seen = 0;
  for (int n : {16, 20, 24}) {
    auto partners = k4_covered_partners(n);
    for (int i = 0; i < 50; ++i) {
      Rng rng(7000 + static_cast<std::uint64_t>(n), {static_cast<std::uint64_t>(i)});
      HamCycle a, b;
      if (i % 3 == 0) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        a = standard_cycle(n).relabel(perm);
        b = partners[static_cast<std::size_t>(rng.range(0, static_cast<int>(partners.size()) - 1))].relabel(perm);
      } else if (i % 3 == 1) {
        std::tie(a, b) = planted_pair(n, rng, n / 4);
      } else {
        std::tie(a, b) = random_pair(n, rng);
      }
      UGraph g = graph_union(a, b);
      bool quarter = 4 * alpha_exact(g).size == n;
      auto cover = find_k4_cover(g);
      bool covered = cover && check_cover(g, *cover);
      if (quarter != covered) return fail("n=" + std::to_string(n) + " sample " + std::to_string(i));
      covered_seen += covered;
    }
  }
  auto e8 = find_exceptional(8);
  if (e8.alpha != 2 || zeta(e8.g) != 1) return fail("exceptional n=8");
  auto e12 = find_exceptional(12);
  if (e12.alpha != 3 || zeta(e12.g) != 2) return fail("exceptional n=12");
  return {true, "150 samples (" + std::to_string(covered_seen) + " covered), exceptional 8 and 12 found"};
}

Outcome c8() {
  UGraph g = counterexample_strip(3);
  int a = alpha_exact(g).size, z = zeta(g);
  if (g.order() != 24 || a != 6 || z != 3)
    return fail("alpha=" + std::to_string(a) + " zeta=" + std::to_string(z));
  return {true, "n=24, alpha=6, zeta=3"};
}

Outcome c9() {
  ChainSpec spec;
  spec.base = circulant_family(9);
  spec.blocks = 4;
  spec.count = 6;
  spec.seed = 9;
  spec.epsilon = Rational(1, 20);
  auto r = amplify(spec, 1);
  if (r.cycles.size() != 6) return fail("expected 6 cycles");
  for (const auto& c : r.cycles)
    if (c.order() != 36 || !is_hamiltonian(c)) return fail("output is not a Hamiltonian cycle on 36 vertices");
  for (std::size_t i = 0; i < r.cycles.size(); ++i)
    for (std::size_t j = i + 1; j < r.cycles.size(); ++j)
      if (Rational(alpha_exact(graph_union(r.cycles[i], r.cycles[j])).size) > r.bound) return fail("alpha above bound");
  auto again = amplify(spec, 4);
  if (again.cycles != r.cycles || again.chains != r.chains) return fail("result depends on the worker count");
  return {true, "6 cycles on 36 vertices, bound " + to_string(r.bound)};
}

Outcome c10() {
  Rational t = threshold_lower().value;
  Rational s = semirandom_rate_limit(Rational(1, 3), 5, 0);
  if (t != Rational(45, 169)) return fail("threshold " + to_string(t));
  if (s != Rational(11, 30)) return fail("rate " + to_string(s));
  return {true, to_string(t) + " and " + to_string(s)};
}

Outcome c11() {
  int applicable = 0;
  for (int i = 0; i < 1000; ++i) {
    Rng rng(1100, {static_cast<std::uint64_t>(i)});
    UGraph g = random_k4free_graph(rng.range(3, 26), rng);
    if (!locke_lou_check(g).ok()) return fail("locke-lou graph " + std::to_string(i));
    auto st = stoneage_check(g);
    if (st.applicable && !st.holds) return fail("stoneage graph " + std::to_string(i));
    applicable += st.applicable;
  }
  for (int i = 0; i < 200; ++i) {
    Rng rng(1101, {static_cast<std::uint64_t>(i)});
    auto sys = random_set_system(rng);
    if (!johnson_check(sys.sets, sys.ground, Rational(sys.x_num, sys.x_den), Rational(sys.eps_num, sys.eps_den)).holds)
      return fail("johnson system " + std::to_string(i));
  }
  for (int i = 0; i < 200; ++i) {
    Rng rng(1102, {static_cast<std::uint64_t>(i)});
    auto t = random_triple(rng.range(8, 24), rng);
    if (!psizeta_stats(t.c, t.d1, t.d2).holds) return fail("psizeta triple " + std::to_string(i));
  }
  return {true, "1000 graphs (" + std::to_string(applicable) + " non-regular), 200 set systems, 200 triples"};
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> all = {
      {1, "f(4,1) exhaustive", 1, c1},
      {2, "f(8,2) with witness and pinned bound", 60, c2},
      {3, "f(12,3) pin-and-filter", 1800, c3},
      {4, "circulant triangle covers", 60, c4},
      {5, "reduction postconditions", 300, c5},
      {6, "smooth inequality", 300, c6},
      {7, "structural equivalence", 600, c7},
      {8, "counterexample strip", 5, c8},
      {9, "amplify", 120, c9},
      {10, "exact thresholds", 1, c10},
      {11, "inequality corpora", 900, c11},
  };
  int failures = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && s > c.budget_s) o = fail("over time budget of " + std::to_string(static_cast<int>(c.budget_s)) + " s");
    failures += !o.pass;
    std::printf("%s criterion %d (%s): %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), s);
    std::fflush(stdout);
  }
  return failures ? 1 : 0;
}
