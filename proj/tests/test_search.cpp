#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "twomilton/constructions.hpp"
#include "twomilton/errors.hpp"
#include "twomilton/independence.hpp"
#include "twomilton/k4.hpp"
#include "twomilton/random.hpp"
#include "twomilton/search.hpp"

using namespace twomilton;

namespace {

std::set<std::vector<std::pair<int, int>>> edge_sets(const std::vector<HamCycle>& cycles) {
  std::set<std::vector<std::pair<int, int>>> out;
  for (const auto& c : cycles) out.insert(oracle::edge_set(c));
  return out;
}

bool covered(const HamCycle& a, const HamCycle& b) { return oracle::clique_partition(graph_union(a, b), 4); }

const PartnerScan& scan12() {
  static const PartnerScan s = scan_partners(12, 3, 2);
  return s;
}

}  // namespace

TEST_CASE("cycle enumeration counts") {
  CHECK(all_cycles(4).size() == 3);
  CHECK(all_cycles(5).size() == 12);
  CHECK(all_cycles(8).size() == 2520);
  for (int n = 4; n <= 8; ++n) {
    auto cycles = all_cycles(n);
    CHECK(edge_sets(cycles) == edge_sets(oracle::all_cycles(n)));
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      CHECK(canonical_key(cycles[i]).key == cycles[i].sequence());
      if (i > 0) CHECK(cycles[i - 1].sequence() < cycles[i].sequence());
    }
  }
  CHECK_THROWS_AS(all_cycles(14), LimitExceeded);
}

TEST_CASE("pinned enumeration keeps one cycle per orbit") {
  for (int n : {6, 7, 8}) {
    HamCycle pin = standard_cycle(n);
    auto autos = cycle_automorphisms(pin);
    CHECK(autos.size() == static_cast<std::size_t>(2 * n));
    for (const auto& p : autos) CHECK(canonical_key(pin.relabel(p)) == canonical_key(pin));
    std::set<CanonicalCycleKey> orbit_mins;
    for (const auto& c : oracle::all_cycles(n)) {
      CanonicalCycleKey best = canonical_key(c);
      for (const auto& p : autos) best = std::min(best, canonical_key(c.relabel(p)));
      orbit_mins.insert(best);
    }
    auto pinned = all_cycles(n, pin);
    CHECK(pinned.size() == orbit_mins.size());
    for (const auto& c : pinned) CHECK(orbit_mins.count(canonical_key(c)) == 1);
  }
}

TEST_CASE("partner scan matches the naive scan and the oracle") {
  for (auto [n, k] : {std::pair{6, 1}, {6, 2}, {7, 2}, {8, 2}, {8, 3}, {9, 2}}) {
    auto fast = scan_partners(n, k);
    auto naive = scan_partners_naive(n, k);
    CHECK(fast.stats.accounted());
    CHECK(naive.stats.accounted());
    REQUIRE(fast.partners.size() == naive.partners.size());
    for (std::size_t i = 0; i < fast.partners.size(); ++i) CHECK(fast.partners[i] == naive.partners[i]);
    if (n <= 8) {
      HamCycle pin = standard_cycle(n);
      std::size_t expected = 0;
      for (const auto& c : oracle::all_cycles(n))
        if (oracle::edge_set(c) != oracle::edge_set(pin) && oracle::alpha(graph_union(pin, c)) <= k) ++expected;
      CHECK(fast.partners.size() == expected);
    }
  }
}

TEST_CASE("partner scan does not depend on the worker count") {
  auto one = scan_partners(9, 2, 1);
  auto three = scan_partners(9, 2, 3);
  CHECK(one.partners == three.partners);
  CHECK(one.stats.leaves == three.stats.leaves);
  CHECK(one.stats.pruned_completions == three.stats.pruned_completions);
}

TEST_CASE("f at small orders") {
  CHECK(compute_f(3, 1).value == 1);
  auto f41 = compute_f(4, 1);
  CHECK(f41.value == 3);
  CHECK(f41.exhaustive);
  auto f82 = compute_f(8, 2);
  CHECK(f82.value == 3);
  CHECK(f82.partners == 40);
  CHECK(f82.stats.leaves + f82.stats.pruned_completions == 2520);
  for (std::size_t i = 0; i < f82.witness.size(); ++i)
    for (std::size_t j = i + 1; j < f82.witness.size(); ++j)
      CHECK(oracle::alpha(graph_union(f82.witness[i], f82.witness[j])) <= 2);
  for (int n : {6, 7}) CHECK(compute_f(n, 1).value == 1);
  CHECK(compute_f(9, 2).value == 1);
  CHECK(compute_f(10, 2).value == 1);
}

TEST_CASE("f on five vertices comes from K5") {
  // C5 and the pentagram union to K5, whose independence number is 1.
  auto r = compute_f(5, 1);
  CHECK(r.value == 2);
  REQUIRE(r.witness.size() == 2);
  UGraph g = graph_union(r.witness[0], r.witness[1]);
  CHECK(g.edge_count() == 10);
  CHECK(oracle::alpha(g) == 1);
}

TEST_CASE("f matches brute force over all families") {
  for (int n = 4; n <= 6; ++n)
    for (int k = 1; k <= n / 2; ++k) CHECK(compute_f(n, k).value == oracle::f_value(n, k));
}

TEST_CASE("f is monotone in k") {
  for (int n = 5; n <= 8; ++n) {
    int prev = 0;
    for (int k = 1; k <= 2; ++k) {
      int v = compute_f(n, k).value;
      CHECK(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("f witnesses survive relabeling") {
  auto r = compute_f(8, 2);
  Rng rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<int> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    for (std::size_t i = 0; i < r.witness.size(); ++i)
      for (std::size_t j = i + 1; j < r.witness.size(); ++j)
        CHECK(alpha_exact(graph_union(r.witness[i].relabel(perm), r.witness[j].relabel(perm))).size <= 2);
  }
}

TEST_CASE("f beyond the exhaustive range is a labeled lower bound") {
  auto r = compute_f(14, 4, 1, 3);
  CHECK_FALSE(r.exhaustive);
  CHECK(r.value >= 1);
  for (std::size_t i = 0; i < r.witness.size(); ++i)
    for (std::size_t j = i + 1; j < r.witness.size(); ++j)
      CHECK(alpha_exact(graph_union(r.witness[i], r.witness[j])).size <= 4);
  CHECK(r.audit.front()["event"] == "lower-bound");
  CHECK(compute_f(14, 4, 1, 3).witness == r.witness);
}

TEST_CASE("audit log records the pin") {
  auto r = compute_f(8, 2);
  bool pin = false;
  for (const auto& e : r.audit) pin = pin || e["event"] == "pin";
  CHECK(pin);
  CHECK(to_json(r.stats)["accounted"] == true);
}

TEST_CASE("exceptional graphs") {
  auto e8 = find_exceptional(8);
  CHECK(oracle::alpha(e8.g) == 2);
  CHECK(zeta(e8.g) == 1);
  CHECK(graph_union(e8.c1, e8.c2) == e8.g);
  auto e12 = find_exceptional(12);
  CHECK(alpha_exact(e12.g).size == 3);
  CHECK(zeta(e12.g) == 2);
  CHECK_THROWS_AS(find_exceptional(16), InvalidInput);
}

TEST_CASE("partners at k = n/4 are covered or exceptional") {
  HamCycle pin8 = standard_cycle(8);
  for (const auto& c : scan_partners(8, 2).partners) {
    UGraph g = graph_union(pin8, c);
    CHECK(oracle::alpha(g) == 2);
    CHECK(covered(pin8, c) == (zeta(g) == 2));
  }
  HamCycle pin12 = standard_cycle(12);
  for (const auto& c : scan12().partners) {
    UGraph g = graph_union(pin12, c);
    CHECK(alpha_exact(g).size == 3);
    CHECK((covered(pin12, c) || zeta(g) == 2));
  }
}

TEST_CASE("structural partner generator agrees with the scan") {
  HamCycle pin8 = standard_cycle(8);
  std::vector<HamCycle> from_scan8;
  for (const auto& c : scan_partners(8, 2).partners)
    if (covered(pin8, c)) from_scan8.push_back(c);
  CHECK(k4_covered_partners(8) == from_scan8);

  HamCycle pin12 = standard_cycle(12);
  std::vector<HamCycle> from_scan12;
  for (const auto& c : scan12().partners)
    if (covered(pin12, c)) from_scan12.push_back(c);
  CHECK(k4_covered_partners(12) == from_scan12);

  CHECK(k4_covered_partners(8).size() == 8);
  CHECK(k4_covered_partners(12).size() == 32);
  auto p16 = k4_covered_partners(16);
  CHECK(p16.size() == 192);
  for (const auto& c : p16) CHECK(covered(standard_cycle(16), c));
  CHECK_THROWS_AS(k4_covered_partners(10), InvalidInput);
}

TEST_CASE("no three pairwise covered cycles") {
  auto r8 = verify_nothree(8);
  REQUIRE(r8.triple);
  const auto& t = *r8.triple;
  CHECK((covered(t[0], t[1]) && covered(t[0], t[2]) && covered(t[1], t[2])));
  auto r12 = verify_nothree(12);
  CHECK(r12.exhaustive);
  CHECK_FALSE(r12.triple);
  auto r16 = verify_nothree(16);
  CHECK(r16.exhaustive);
  CHECK_FALSE(r16.triple);
  CHECK(r16.partners == 192);
  auto sampled = verify_nothree(20, 5000, 9);
  CHECK_FALSE(sampled.exhaustive);
  CHECK(sampled.pairs_checked <= 5000);
  CHECK_FALSE(sampled.triple);
}
