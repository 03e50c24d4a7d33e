#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "twomilton/constructions.hpp"
#include "twomilton/errors.hpp"
#include "twomilton/independence.hpp"
#include "twomilton/k4.hpp"

using namespace twomilton;

TEST_CASE("circulant family on 9 vertices") {
  auto fam = circulant_family(9);
  REQUIRE(fam.size() == 5);
  CHECK(fam[0] == standard_cycle(9));
  CHECK(fam[1].sequence() == std::vector<int>{0, 2, 4, 6, 8, 1, 3, 5, 7});
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      UGraph g = graph_union(fam[i], fam[j]);
      CHECK(oracle::alpha(g) == 3);
      CHECK(alpha_exact(g).size == 3);
      CHECK(oracle::clique_partition(g, 3));
    }
}

TEST_CASE("circulant family domain") {
  CHECK_THROWS_AS(circulant_family(12), InvalidInput);
  CHECK_THROWS_AS(circulant_family(10), InvalidInput);
  CHECK_THROWS_AS(circulant_family(3), InvalidInput);
  CHECK_THROWS_AS(circulant_family(7), InvalidInput);
}

TEST_CASE("circulant family at larger orders") {
  for (int n : {15, 21, 27, 33}) {
    auto fam = circulant_family(n);
    REQUIRE(fam.size() == 5);
    auto forests = circulant_forests(n);
    REQUIRE(forests.size() == 3);
    for (int f = 0; f < 3; ++f) {
      UGraph cyc = fam[2 + f].to_graph();
      UGraph forest(n);
      for (auto [u, v] : forests[f]) {
        CHECK(cyc.has_edge(u, v));
        forest.add_edge(u, v);
      }
      CHECK(forest.max_degree() <= 2);
      CHECK(forest.edge_count() < n);
    }
    for (std::size_t i = 0; i < fam.size(); ++i)
      for (std::size_t j = i + 1; j < fam.size(); ++j) {
        UGraph g = graph_union(fam[i], fam[j]);
        auto cover = find_triangle_cover(g);
        REQUIRE(cover);
        CHECK(check_cover(g, *cover));
        CHECK(alpha_exact(g).size <= n / 3);
      }
  }
}

TEST_CASE("circulant forest triangles survive closing") {
  auto forests = circulant_forests(15);
  for (const auto& forest : forests) {
    UGraph g(15);
    for (auto [u, v] : forest) g.add_edge(u, v);
    UGraph c1 = standard_cycle(15).to_graph();
    for (auto [u, v] : c1.edges()) g.add_edge(u, v);
    CHECK(find_triangle_cover(g));
  }
}

TEST_CASE("K4 strips") {
  auto [a3, b3] = k4_strip(3);
  UGraph g3 = graph_union(a3, b3);
  CHECK(g3.order() == 12);
  CHECK(oracle::alpha(g3) == 3);
  CHECK(zeta(g3) == 3);
  auto [a4, b4] = k4_strip(4);
  auto cover = find_k4_cover(graph_union(a4, b4));
  REQUIRE(cover);
  CHECK(cover->blocks.size() == 4);
  for (int k = 3; k <= 12; ++k) {
    auto [a, b] = k4_strip(k);
    CHECK(a.order() == 4 * k);
    CHECK(b.to_graph().min_degree() == 2);
    UGraph g = graph_union(a, b);
    CHECK(alpha_exact(g).size == k);
    CHECK(zeta(g) == k);
    CHECK(g.is_connected());
  }
  CHECK_THROWS_AS(k4_strip(2), InvalidInput);
}

TEST_CASE("triple on 8 vertices") {
  auto t = triple_n8();
  REQUIRE(t.size() == 3);
  for (const auto& c : t) CHECK(c.order() == 8);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      UGraph g = graph_union(t[i], t[j]);
      CHECK(oracle::alpha(g) == 2);
      auto cover = find_k4_cover(g);
      REQUIRE(cover);
      CHECK(cover->blocks.size() == 2);
    }
}

TEST_CASE("counterexample strip") {
  UGraph g2 = counterexample_strip(2);
  CHECK(g2.order() == 16);
  CHECK(g2.is_connected());
  CHECK(g2.max_degree() == 4);
  CHECK(oracle::alpha(g2) == 4);
  UGraph g3 = counterexample_strip(3);
  CHECK(g3.order() == 24);
  CHECK(alpha_exact(g3).size == 6);
  CHECK(oracle::alpha(g3) == 6);
  CHECK(zeta(g3) == 3);
  CHECK(g3.max_degree() == 4);
  CHECK(g3.is_connected());
  for (int u = 2; u <= 7; ++u) {
    UGraph g = counterexample_strip(u);
    CHECK(alpha_exact(g).size == 2 * u);
    CHECK(zeta(g) == u);
  }
  CHECK_THROWS_AS(counterexample_strip(1), InvalidInput);
}

TEST_CASE("amplify bound arithmetic") {
  CHECK(amplify_bound(4, 5, 9, Rational(1, 20), Rational(1, 3)) == Rational(31, 2));
  CHECK(amplify_bound(4, 5, 9, 0, Rational(1, 3)) == Rational(4, 5) * 9 / 2 + Rational(16, 5) * 3 + 2);
  CHECK(block_agreement({0, 1, 2, 3}, {0, 2, 2, 4}) == 2);
  CHECK(base_pair_alpha(circulant_family(9)) == 3);
}

TEST_CASE("amplify on the 9-vertex circulant base") {
  ChainSpec spec;
  spec.base = circulant_family(9);
  spec.blocks = 4;
  spec.count = 6;
  spec.seed = 2024;
  spec.epsilon = Rational(1, 20);
  auto res = amplify(spec);
  REQUIRE(res.cycles.size() == 6);
  CHECK(res.c0 == Rational(1, 3));
  CHECK(res.bound == Rational(31, 2));
  for (const auto& c : res.cycles) CHECK(c.order() == 36);
  for (std::size_t i = 0; i < res.chains.size(); ++i)
    for (std::size_t j = i + 1; j < res.chains.size(); ++j) {
      CHECK(Rational(block_agreement(res.chains[i], res.chains[j])) <= res.agreement_cap);
      UGraph g = graph_union(res.cycles[i], res.cycles[j]);
      int a = alpha_exact(g).size;
      int blockwise = spec.blocks / 2;
      for (int b = 0; b < spec.blocks; ++b) {
        int x = res.chains[i][b], y = res.chains[j][b];
        blockwise += alpha_exact(graph_union(spec.base[x], spec.base[y])).size;
      }
      CHECK(a <= blockwise);
      CHECK(Rational(a) <= res.bound);
    }
  auto again = amplify(spec, 3);
  CHECK(again.cycles == res.cycles);
  CHECK(again.chains == res.chains);
  spec.seed = 2025;
  CHECK(amplify(spec).chains != res.chains);
}

TEST_CASE("amplify validates its spec") {
  ChainSpec spec;
  spec.base = circulant_family(9);
  spec.blocks = 3;
  spec.count = 4;
  CHECK_THROWS_AS(amplify(spec), InvalidInput);
  spec.blocks = 4;
  spec.count = 1;
  CHECK_THROWS_AS(amplify(spec), InvalidInput);
  spec.count = 40;
  spec.epsilon = 0;
  spec.max_attempts = 50;
  CHECK_THROWS_AS(amplify(spec), LimitExceeded);
  spec.base = {standard_cycle(9)};
  CHECK_THROWS_AS(amplify(spec), InvalidInput);
}
