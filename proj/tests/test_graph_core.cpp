#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "twomilton/errors.hpp"
#include "twomilton/family_io.hpp"
#include "twomilton/graph.hpp"
#include "twomilton/random.hpp"
#include "twomilton/constructions.hpp"
#include "twomilton/k4.hpp"

using namespace twomilton;

namespace {

std::vector<int> random_perm(int n, Rng& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  rng.shuffle(p);
  return p;
}

}  // namespace

TEST_CASE("make_cycle validates its input") {
  auto c = make_cycle(4, {0, 1, 2, 3});
  CHECK(oracle::edge_set(c) == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
  CHECK_THROWS_AS(make_cycle(4, {0, 1, 1, 3}), InvalidInput);
  CHECK_THROWS_AS(make_cycle(4, {0, 1, 2, 4}), InvalidInput);
  CHECK_THROWS_AS(make_cycle(4, {0, 1, 2}), InvalidInput);
  CHECK_THROWS_AS(make_cycle(2, {0, 1}), InvalidInput);
  CHECK_NOTHROW(make_cycle(8, {0, 4, 1, 5, 2, 6, 3, 7}));
}

TEST_CASE("cycle edges and degrees") {
  Rng rng(3);
  for (int n = 3; n <= 40; ++n) {
    auto c = make_cycle(n, random_perm(n, rng));
    UGraph g = c.to_graph();
    CHECK(g.edge_count() == n);
    CHECK(g.min_degree() == 2);
    CHECK(g.max_degree() == 2);
    CHECK(g.is_connected());
  }
}

TEST_CASE("union of cycles") {
  auto c = standard_cycle(8);
  CHECK(graph_union(c, c) == c.to_graph());
  auto chord = make_cycle(8, {0, 2, 4, 6, 1, 3, 5, 7});
  UGraph g = graph_union(c, chord);
  // 7-0 lies on both cycles.
  CHECK(g.edge_count() == 15);
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(7) == 3);
  CHECK(g.max_degree() == 4);
  auto disjoint = make_cycle(8, {0, 2, 4, 6, 1, 7, 5, 3});
  CHECK(graph_union(c, disjoint).edge_count() == 16);
  auto t = triple_n8();
  CHECK(oracle::clique_partition(graph_union(t[0], t[1]), 4));
  CHECK_THROWS_AS(graph_union(standard_cycle(5), standard_cycle(6)), InvalidInput);
}

TEST_CASE("union properties on random pairs") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int n = rng.range(5, 40);
    auto a = make_cycle(n, random_perm(n, rng));
    auto b = make_cycle(n, random_perm(n, rng));
    if (canonical_key(a) == canonical_key(b)) continue;
    UGraph g = graph_union(a, b);
    CHECK(g.is_connected());
    CHECK(g.max_degree() <= 4);
    CHECK(g.min_degree() >= 2);
    auto pi = random_perm(n, rng);
    CHECK(graph_union(a.relabel(pi), b.relabel(pi)) == g.relabel(pi));
  }
}

TEST_CASE("canonical keys") {
  auto k = [](std::vector<int> v) { return canonical_key(make_cycle(static_cast<int>(v.size()), v)); };
  CHECK(k({0, 1, 2, 3}) == k({1, 2, 3, 0}));
  CHECK(k({0, 1, 2, 3}) == k({0, 3, 2, 1}));
  CHECK(k({0, 1, 2, 3}) != k({0, 2, 1, 3}));
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int n = rng.range(3, 20);
    auto a = make_cycle(n, random_perm(n, rng));
    auto key = canonical_key(a);
    CHECK(key.key.front() == 0);
    CHECK(key.key[1] < key.key.back());
    CHECK(oracle::edge_set(from_key(key)) == oracle::edge_set(a));
    auto seq = a.sequence();
    std::rotate(seq.begin(), seq.begin() + rng.range(0, n - 1), seq.end());
    if (rng.chance(1, 2)) std::reverse(seq.begin(), seq.end());
    CHECK(canonical_key(make_cycle(n, seq)) == key);
  }
}

TEST_CASE("distinct keys over all permutations") {
  for (auto [n, expected] : {std::pair{4, 3}, {5, 12}, {6, 60}}) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::set<CanonicalCycleKey> keys;
    std::set<std::vector<std::pair<int, int>>> edge_sets;
    do {
      auto c = make_cycle(n, p);
      keys.insert(canonical_key(c));
      edge_sets.insert(oracle::edge_set(c));
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(static_cast<int>(keys.size()) == expected);
    CHECK(edge_sets.size() == keys.size());
  }
}

TEST_CASE("family document round trip") {
  auto doc = parse_family(R"({"format_version":1,"n":4,"cycles":[[0,1,2,3]]})");
  REQUIRE(doc.cycles.size() == 1);
  CHECK(doc.cycles[0].sequence() == std::vector<int>{0, 1, 2, 3});

  FamilyDocument d;
  d.n = 9;
  d.cycles = circulant_family(9);
  d.header = {{"generator", "circulant"}, {"seed", 4}};
  d.certificates = {{"independent_sets", {{{"alpha", 3}, {"vertices", {0, 3, 6}}}}}};
  std::string text = serialize_family(d);
  auto back = parse_family(text);
  CHECK(serialize_family(back) == text);
  CHECK(back.cycles == d.cycles);
  CHECK(serialize_family_line(back) == serialize_family_line(d));
  CHECK(serialize_family(parse_family(serialize_family_line(d))) == text);

  FamilyDocument e;
  e.n = 5;
  e.edges = std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  CHECK(serialize_family(parse_family(serialize_family(e))) == serialize_family(e));
  CHECK(parse_family(serialize_family(e)).graph().edge_count() == 4);
}

TEST_CASE("family document errors") {
  CHECK_THROWS_AS(parse_family(R"({"format_version":1,"n":4,"cycles":[[0,1,2,3],[0,1,2,3,4]]})"), InvalidInput);
  CHECK_THROWS_AS(parse_family(R"({"format_version":1,"n":4,"cycles":[[0,1,2,3.0]]})"), InvalidInput);
  CHECK_THROWS_AS(parse_family(R"({"format_version":1,"n":4)"), InvalidInput);
  CHECK_THROWS_AS(parse_family(R"({"n":4,"cycles":[[0,1,2,3]]})"), InvalidInput);
  CHECK_THROWS_AS(parse_family(R"({"format_version":2,"n":4,"cycles":[[0,1,2,3]]})"), InvalidInput);
  CHECK_THROWS_AS(parse_family(R"({"format_version":1,"n":4})"), InvalidInput);
  CHECK_THROWS_AS(parse_family(R"({"format_version":1,"n":4,"edges":[[0,0]]})"), InvalidInput);
  CHECK_THROWS_AS(parse_family(R"([1,2])"), InvalidInput);
}

TEST_CASE("JSON-lines streams") {
  FamilyDocument a, b;
  a.n = b.n = 5;
  a.cycles = {standard_cycle(5)};
  b.cycles = {make_cycle(5, {0, 2, 4, 1, 3})};
  auto docs = parse_family_stream(serialize_family_line(a) + "\n\n" + serialize_family_line(b) + "\n");
  REQUIRE(docs.size() == 2);
  CHECK(docs[1].cycles == b.cycles);
  CHECK(parse_family_stream(serialize_family(a)).size() == 1);
  CHECK(parse_family_stream("  \n").empty());
}

TEST_CASE("graph basics") {
  UGraph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  g.add_edge(3, 4);
  CHECK(g.edge_count() == 2);
  CHECK_THROWS_AS(g.add_edge(2, 2), InvalidInput);
  CHECK(!g.is_connected());
  CHECK(g.components(g.all()).size() == 3);
  CHECK(g.connected(0));
  g.remove_edge(0, 1);
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(UGraph(65), LimitExceeded);
  std::vector<int> back;
  UGraph h = graph_union(standard_cycle(6), standard_cycle(6)).induced(bit(1) | bit(2) | bit(4), &back);
  CHECK(h.order() == 3);
  CHECK(h.edge_count() == 1);
  CHECK(back == std::vector<int>{1, 2, 4});
}
