#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "sgraph/cycles.hpp"
#include "sgraph/invariants.hpp"
#include "sgraph/linalg.hpp"
#include "sgraph/rng.hpp"
#include "testutil.hpp"

using namespace sgraph;

namespace {

// C4 on 0..3 with the path 3-4-5 attached; the running 6-vertex example.
SignedGraph c4_with_tail() {
  return SignedGraph::from_edges(6, {{0, 1, Sign::Plus},
                                     {1, 2, Sign::Plus},
                                     {2, 3, Sign::Plus},
                                     {0, 3, Sign::Plus},
                                     {3, 4, Sign::Plus},
                                     {4, 5, Sign::Plus}});
}

SignedGraph two_triangles_sharing_vertex() {
  return SignedGraph::from_edges(5, {{0, 1, Sign::Plus},
                                     {0, 2, Sign::Plus},
                                     {1, 2, Sign::Plus},
                                     {0, 3, Sign::Plus},
                                     {0, 4, Sign::Plus},
                                     {3, 4, Sign::Plus}});
}

std::multiset<std::vector<int>> as_vertex_sets(const std::vector<Cycle>& cycles) {
  std::multiset<std::vector<int>> out;
  for (auto c : cycles) {
    std::ranges::sort(c);
    out.insert(c);
  }
  return out;
}

}  // namespace

TEST_CASE("blocks") {
  SUBCASE("every tree edge is its own block") {
    const auto bs = blocks(path_graph(5));
    CHECK(bs.size() == 4);
    for (const auto& b : bs) CHECK(b.is_edge);
  }
  SUBCASE("a cycle is one block") {
    const auto bs = blocks(cycle_graph(5));
    REQUIRE(bs.size() == 1);
    CHECK(bs[0].is_cycle);
    CHECK_FALSE(bs[0].is_edge);
  }
  SUBCASE("two triangles sharing a cut vertex") {
    const auto bs = blocks(two_triangles_sharing_vertex());
    REQUIRE(bs.size() == 2);
    for (const auto& b : bs) {
      CHECK(b.is_cycle);
      CHECK(b.vertices.contains(0));
    }
  }
  SUBCASE("K4 is one non-cycle block") {
    const auto bs = blocks(complete_graph(4));
    REQUIRE(bs.size() == 1);
    CHECK_FALSE(bs[0].is_cycle);
    CHECK(bs[0].edges.size() == 6);
  }
  SUBCASE("every edge lies in exactly one block") {
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      const SignedGraph g = testutil::random_graph(rng, 1 + rng.below(10), 35);
      std::multiset<std::pair<int, int>> covered;
      for (const auto& b : blocks(g))
        for (auto [u, v] : b.edges) covered.insert(std::minmax(u, v));
      std::multiset<std::pair<int, int>> expected;
      for (const auto& e : g.edges()) expected.insert({e.u, e.v});
      CHECK(covered == expected);
    }
  }
}

TEST_CASE("cycles_vertex_disjoint") {
  SUBCASE("cycle with a tail") {
    const auto inv = cycles_vertex_disjoint(c4_with_tail());
    REQUIRE(inv.disjoint);
    REQUIRE(inv.cycles.size() == 1);
    CHECK(inv.cycles[0] == Cycle{0, 1, 2, 3});
  }
  SUBCASE("shared vertex is detected and named") {
    const auto inv = cycles_vertex_disjoint(two_triangles_sharing_vertex());
    CHECK_FALSE(inv.disjoint);
    CHECK(inv.witness_kind == DisjointWitnessKind::SharedVertex);
    CHECK(inv.witness == VertexSet{0});
  }
  SUBCASE("a chorded block is detected") {
    const auto inv = cycles_vertex_disjoint(complete_graph(4));
    CHECK_FALSE(inv.disjoint);
    CHECK(inv.witness_kind == DisjointWitnessKind::NonCycleBlock);
    CHECK(inv.witness.size() == 4);
  }
  SUBCASE("matches the brute-force cycle enumeration") {
    Rng rng(7);
    for (int trial = 0; trial < 120; ++trial) {
      const SignedGraph g = testutil::random_graph(rng, 1 + rng.below(8), 30 + rng.below(30));
      const auto all = oracle::brute_all_cycles(g);
      const auto inv = cycles_vertex_disjoint(g);
      CHECK(inv.disjoint == oracle::cycles_pairwise_disjoint(all, g.order()));
      if (inv.disjoint) {
        CHECK(as_vertex_sets(inv.cycles) == as_vertex_sets(all));
        CHECK(static_cast<int>(inv.cycles.size()) == cyclomatic_number(g));
        std::vector<int> hits(g.order(), 0);
        for (const auto& c : inv.cycles)
          for (int v : c) CHECK(++hits[v] == 1);
      }
    }
  }
}

TEST_CASE("cycle_sign") {
  CHECK(cycle_sign(cycle_graph(4), {0, 1, 2, 3}) == Sign::Plus);

  const SignedGraph tri =
      SignedGraph::from_edges(3, {{0, 1, Sign::Minus}, {0, 2, Sign::Plus}, {1, 2, Sign::Plus}});
  CHECK(cycle_sign(tri, {0, 1, 2}) == Sign::Minus);

  std::vector<Sign> signs(6, Sign::Plus);
  signs[1] = signs[4] = Sign::Minus;
  CHECK(cycle_sign(cycle_graph(6, signs), {0, 1, 2, 3, 4, 5}) == Sign::Plus);

  CHECK_THROWS_AS(cycle_sign(path_graph(4), {0, 1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(cycle_sign(cycle_graph(4), {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(cycle_sign(cycle_graph(4), {0, 1, 2, 1}), std::invalid_argument);
}

TEST_CASE("cycle_membership agrees with the brute cycle list") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const SignedGraph g = testutil::random_graph(rng, 1 + rng.below(8), 35);
    const auto all = oracle::brute_all_cycles(g);
    const auto membership = cycle_membership(g);
    for (int v = 0; v < g.order(); ++v) {
      int through = 0;
      for (const auto& c : all)
        through += std::find(c.begin(), c.end(), v) != c.end();
      CHECK(membership[v] == std::min(through, 2));
    }
  }
}

TEST_CASE("contract") {
  SUBCASE("cycle with a tail contracts to a path") {
    const auto cs = contract(c4_with_tail());
    CHECK(cs.t_g == path_graph(3));
    CHECK(cs.cyclic_vertices == VertexSet{0});
    CHECK(cs.t_g_bracket == path_graph(2));
    CHECK(cs.contraction_map == std::vector<int>{0, 0, 0, 0, 1, 2});
    CHECK(independence_number(cs.t_g).alpha == 2);
    CHECK(independence_number(cs.t_g_bracket).alpha == 1);
  }
  SUBCASE("forests contract to themselves") {
    Rng rng(13);
    for (int trial = 0; trial < 25; ++trial) {
      const SignedGraph f = testutil::random_forest(rng, 1 + rng.below(10));
      const auto cs = contract(f);
      CHECK(cs.cycles.empty());
      CHECK(cs.cyclic_vertices.empty());
      CHECK(cs.t_g == underlying(f));
      CHECK(cs.t_g_bracket == cs.t_g);
    }
  }
  SUBCASE("disjoint cycles contract to isolated cyclic vertices") {
    std::vector<SignedGraph> parts{cycle_graph(3), cycle_graph(4)};
    const auto cs = contract(disjoint_union(parts));
    CHECK(cs.t_g.order() == 2);
    CHECK(cs.t_g.size() == 0);
    CHECK(cs.cyclic_vertices == VertexSet{0, 1});
    CHECK(cs.t_g_bracket.order() == 0);
  }
  SUBCASE("intersecting cycles are refused") {
    CHECK_THROWS_AS(contract(complete_graph(4)), std::invalid_argument);
    CHECK_THROWS_AS(contract(two_triangles_sharing_vertex()), std::invalid_argument);
  }
  SUBCASE("contraction counts") {
    Rng rng(17);
    int contracted = 0;
    for (int trial = 0; trial < 120; ++trial) {
      const SignedGraph g = testutil::random_graph(rng, 1 + rng.below(8), 30);
      const auto inv = cycles_vertex_disjoint(g);
      if (!inv.disjoint) continue;
      ++contracted;
      const auto cs = contract(g, inv);
      int shrink = 0;
      for (const auto& c : cs.cycles) shrink += static_cast<int>(c.size()) - 1;
      CHECK(cs.t_g.order() == g.order() - shrink);
      CHECK(cyclomatic_number(cs.t_g) == 0);
      CHECK(cs.signs.size() == cs.cycles.size());
    }
    CHECK(contracted > 10);
  }
}

TEST_CASE("switch_signs") {
  const SignedGraph g = c4_with_tail();
  CHECK(switch_signs(g, VertexSet{}) == g);

  Rng rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const SignedGraph h = testutil::random_graph(rng, 2 + rng.below(8), 45);
    std::vector<int> subset;
    for (int v = 0; v < h.order(); ++v)
      if (rng.coin()) subset.push_back(v);
    const VertexSet u(subset);

    CHECK(switch_signs(switch_signs(h, u), u) == h);  // involution

    // cycle signs are preserved: each cycle crosses the cut evenly
    const SignedGraph switched = switch_signs(h, u);
    for (const auto& cyc : oracle::brute_all_cycles(h))
      CHECK(cycle_sign(h, cyc) == cycle_sign(switched, cyc));
  }
}

TEST_CASE("normalize_signs") {
  SUBCASE("any signed tree normalizes to all-Plus") {
    Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
      const SignedGraph t = testutil::random_tree(rng, 1 + rng.below(10));
      CHECK(normalize_signs(t) == underlying(t));
    }
  }
  SUBCASE("canonical representative of the switching class") {
    Rng rng(29);
    for (int trial = 0; trial < 60; ++trial) {
      const SignedGraph g = testutil::random_graph(rng, 2 + rng.below(8), 45);
      std::vector<int> subset;
      for (int v = 0; v < g.order(); ++v)
        if (rng.coin()) subset.push_back(v);
      const SignedGraph switched = switch_signs(g, VertexSet(subset));
      CHECK(normalize_signs(switched) == normalize_signs(g));
      CHECK(normalize_signs(normalize_signs(g)) == normalize_signs(g));
    }
  }
  SUBCASE("forest edges come out Plus") {
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
      const SignedGraph g = testutil::random_graph(rng, 2 + rng.below(8), 45);
      const SignedGraph norm = normalize_signs(g);
      const auto forest = spanning_forest_edges(norm);
      for (int i = 0; i < norm.size(); ++i)
        if (forest[i]) CHECK(norm.edges()[i].sign == Sign::Plus);
    }
  }
  SUBCASE("rank is invariant under normalization") {
    Rng rng(37);
    for (int trial = 0; trial < 30; ++trial) {
      const SignedGraph g = testutil::random_graph(rng, 2 + rng.below(8), 45);
      CHECK(rank_exact(adjacency_matrix(normalize_signs(g))) ==
            rank_exact(adjacency_matrix(g)));
    }
  }
}
