#include <doctest.h>

#include <bit>
#include <random>

#include "blowup/constructions.hpp"
#include "blowup/enumerate.hpp"
#include "blowup/graph.hpp"
#include "blowup/invariants.hpp"
#include "test_util.hpp"

using namespace blowup;

TEST_CASE("chromatic number: known values") {
  CHECK(chromatic_number(cycle_graph(5)) == 3);
  CHECK(chromatic_number(complete_multipartite_graph({3, 3, 3})) == 3);
  CHECK(chromatic_number(test::petersen()) == 3);
  CHECK(chromatic_number(complete_graph(7)) == 7);
  CHECK(chromatic_number(Graph(4)) == 1);
  CHECK(chromatic_number(Graph(0)) == 0);
  CHECK(chromatic_number(matching_graph(3)) == 2);
  CHECK_THROWS_AS(chromatic_number(Graph(21)), ResourceError);
}

TEST_CASE("k_colorable is consistent with the chromatic number") {
  std::mt19937 rng(3);
  for (int it = 0; it < 30; ++it) {
    Graph g = test::random_graph(8, 0.5, rng);
    int chi = chromatic_number(g);
    CHECK(k_colorable(g, chi));
    if (chi > 0) CHECK_FALSE(k_colorable(g, chi - 1));
  }
}

TEST_CASE("matching number: known values and witness") {
  CHECK(matching_number(path_graph(5)) == 2);
  CHECK(matching_number(complete_graph(7)) == 3);
  CHECK(matching_number(h_odd_gadget(4)) == 3);
  CHECK(matching_number(test::petersen()) == 5);
  MatchingResult m = maximum_matching(complete_graph(8));
  CHECK(m.size == 4);
  std::uint64_t used = 0;
  for (auto [u, v] : m.edges) {
    CHECK(complete_graph(8).has_edge(u, v));
    CHECK(((used >> u) & 1) == 0);
    CHECK(((used >> v) & 1) == 0);
    used |= (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
  }
}

TEST_CASE("matching number agrees with brute force up to order 8") {
  std::mt19937 rng(17);
  for (int n = 2; n <= 8; ++n)
    for (int it = 0; it < 25; ++it) {
      Graph g = test::random_graph(n, 0.4, rng);
      CHECK(matching_number(g) == test::brute_matching(g));
    }
  // odd structures that exercise blossom contraction
  CHECK(matching_number(cycle_graph(7)) == 3);
  Graph bridged = disjoint_union(complete_graph(3), complete_graph(3));
  bridged.add_edge(0, 3);
  CHECK(matching_number(bridged) == 3);
}

TEST_CASE("covering number: known values") {
  CHECK(covering_number(cycle_graph(5)) == 3);
  CHECK(covering_number(complete_bipartite_graph(3, 4)) == 3);
  CHECK(covering_number(matching_graph(3)) == 3);
  CHECK(covering_number(Graph(5)) == 0);
  CHECK_THROWS_AS(covering_number(Graph(33)), ResourceError);
  CoverResult cover = minimum_vertex_cover(test::petersen());
  CHECK(cover.size == 6);
  for (auto [u, v] : test::petersen().edges())
    CHECK(((cover.vertices >> u & 1) || (cover.vertices >> v & 1)));
}

TEST_CASE("Gallai and Koenig identities on all graphs up to order 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : all_graphs(n)) {
      CHECK(covering_number(g) + test::brute_independence(g) == n);
      if (bipartition(g))
        CHECK(covering_number(g) == matching_number(g));
      else
        CHECK(covering_number(g) >= matching_number(g));
    }
  }
}

TEST_CASE("bipartition minimises side A per component") {
  auto part = bipartition(disjoint_union(path_graph(4), star_graph(5)));
  REQUIRE(part);
  CHECK(std::popcount(part->side_a) == 3);  // 2 from P_4, 1 from the star
  CHECK_FALSE(bipartition(complete_graph(3)));
  // isolated vertices go to side B
  auto single = bipartition(Graph(3));
  REQUIRE(single);
  CHECK(single->side_a == 0);
  CHECK(std::popcount(single->side_b) == 3);
}

TEST_CASE("independent covering number: worked examples") {
  CHECK(independent_covering_number(path_graph(6))->size == 3);
  CHECK(independent_covering_number(complete_bipartite_graph(2, 5))->size == 2);
  CHECK_FALSE(independent_covering_number(complete_graph(3)).has_value());
  CHECK(independent_covering_number(matching_graph(4))->size == 4);
  // isolated vertices are not part of a minimum covering
  CHECK(independent_covering_number(disjoint_union(path_graph(3), Graph(3)))
            ->size == 1);
}

TEST_CASE("independent coverings agree with exhaustive enumeration") {
  std::mt19937 rng(29);
  int checked = 0;
  for (int it = 0; checked < 40 && it < 400; ++it) {
    Graph g = test::random_graph(6 + it % 3, 0.3, rng);
    auto icn = independent_covering_number(g);
    if (!icn) continue;
    ++checked;
    // exhaustive: smallest independent set meeting all edges
    int best = g.order() + 1;
    std::uint64_t count_at_best = 0;
    for (std::uint64_t s = 0;; ++s) {
      bool indep = true, covers = true;
      for (int v = 0; v < g.order() && indep; ++v)
        if (s >> v & 1)
          if (g.neighbors(v) & s) indep = false;
      if (indep)
        for (auto [u, v] : g.edges())
          if (!(s >> u & 1) && !(s >> v & 1)) {
            covers = false;
            break;
          }
      if (indep && covers) {
        int size = std::popcount(s);
        if (size < best) {
          best = size;
          count_at_best = 1;
        } else if (size == best) {
          ++count_at_best;
        }
      }
      if (s == g.vertex_mask()) break;
    }
    CHECK(icn->size == best);
    CHECK(min_independent_coverings(g).size() == count_at_best);
  }
  CHECK(checked == 40);
}

TEST_CASE("connected graphs whose matching number survives any deletion are "
          "factor-critical") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : all_graphs(n)) {
      if (component_masks(g).size() != 1) continue;
      int nu = matching_number(g);
      bool stable = true;
      for (int v = 0; v < n && stable; ++v)
        if (matching_number(g.induced(g.vertex_mask() &
                                      ~(std::uint64_t{1} << v))) != nu)
          stable = false;
      if (stable) CHECK(is_factor_critical(g));
    }
  }
}

TEST_CASE("factor criticality matches the definition replay") {
  CHECK(is_factor_critical(cycle_graph(5)));
  CHECK(is_factor_critical(cycle_graph(7)));
  CHECK(is_factor_critical(complete_graph(5)));
  CHECK_FALSE(is_factor_critical(complete_graph(4)));
  CHECK_FALSE(is_factor_critical(path_graph(5)));
  CHECK_FALSE(is_factor_critical(star_graph(5)));
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : all_graphs(n)) {
      bool replay = matching_number(g) == n / 2;
      for (int v = 0; v < n && replay; ++v)
        if (matching_number(g.induced(g.vertex_mask() &
                                      ~(std::uint64_t{1} << v))) != n / 2)
          replay = false;
      CHECK(is_factor_critical(g) == replay);
    }
  }
}
