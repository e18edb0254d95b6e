#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "blowup/canonical.hpp"
#include "blowup/enumerate.hpp"
#include "blowup/graph.hpp"
#include "blowup/graph6.hpp"
#include "blowup/subgraph.hpp"
#include "test_util.hpp"

using namespace blowup;

TEST_CASE("graph basics") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK(g.size() == 2);
  CHECK(g.has_edge(1, 0));
  g.add_edge(0, 1);  // idempotent
  CHECK(g.size() == 2);
  g.remove_edge(0, 1);
  CHECK(g.size() == 1);
  CHECK(g.degree(1) == 1);
  CHECK_THROWS_AS(g.add_edge(0, 0), ParameterError);
  CHECK_THROWS_AS(Graph(65), ParameterError);

  CHECK(path_graph(5).size() == 4);
  CHECK(cycle_graph(5).size() == 5);
  CHECK(star_graph(4).size() == 3);
  CHECK(matching_graph(3).size() == 3);
  CHECK(complete_graph(5).size() == 10);
  CHECK(complete_bipartite_graph(2, 3).size() == 6);
}

TEST_CASE("compose edge counts") {
  Graph k3 = complete_graph(3);
  Graph c4 = cycle_graph(4);
  // e(a+b) = e(a) + e(b) + |a||b|; e(a u b) = e(a) + e(b)
  CHECK(join(k3, c4).size() == 3 + 4 + 12);
  CHECK(disjoint_union(k3, k3).size() == 6);
  CHECK(disjoint_union(k3, k3).order() == 6);
  CHECK(compose(complete_graph(6), Graph(0), ComposeMode::kComplement).size() == 0);

  // wheel-like: K_1 + C_4 has 5 vertices and 8 edges
  Graph wheel = compose(complete_graph(1), c4, ComposeMode::kJoin);
  CHECK(wheel.order() == 5);
  CHECK(wheel.size() == 8);

  std::mt19937 rng(7);
  for (int it = 0; it < 20; ++it) {
    Graph a = test::random_graph(5, 0.5, rng);
    Graph b = test::random_graph(6, 0.4, rng);
    CHECK(join(a, b).size() == a.size() + b.size() + 30);
    CHECK(disjoint_union(a, b).size() == a.size() + b.size());
    CHECK(complement(complement(a)) == a);
  }
}

TEST_CASE("components and isolated vertices") {
  Graph g = disjoint_union(complete_graph(3), matching_graph(2));
  CHECK(component_masks(g).size() == 3);
  Graph with_isolated = disjoint_union(g, Graph(2));
  CHECK(without_isolated_vertices(with_isolated) == g);
}

TEST_CASE("graph6 round trips") {
  std::mt19937 rng(11);
  for (int n = 0; n <= 10; ++n) {
    for (int it = 0; it < 30; ++it) {
      Graph g = test::random_graph(n, 0.4, rng);
      Graph back = graph6_decode(graph6_encode(g));
      CHECK(back == g);
    }
  }
  // re-emission is the identity on emitted strings
  Graph g = test::random_graph(9, 0.5, rng);
  std::string s = graph6_encode(g);
  CHECK(graph6_encode(graph6_decode(s)) == s);

  // long form for orders 63 and 64
  Graph big(64);
  big.add_edge(0, 63);
  CHECK(graph6_decode(graph6_encode(big)) == big);

  CHECK(graph6_decode("D?{").order() == 5);
}

TEST_CASE("graph6 parse errors carry offsets") {
  CHECK_THROWS_AS(graph6_decode(""), ParseError);
  CHECK_THROWS_AS(graph6_decode("D?"), ParseError);  // truncated
  try {
    graph6_decode("D?");
  } catch (const ParseError& e) {
    CHECK(e.offset() > 0);
  }
  CHECK_THROWS_AS(graph6_decode("D?{x"), ParseError);   // trailing bytes
  CHECK_THROWS_AS(graph6_decode("D\x1f{"), ParseError);  // bad byte
  CHECK_THROWS_AS(graph6_decode("~~????"), ParseError);  // oversized header
  CHECK_THROWS_AS(graph6_decode("~?@c"), ParseError);    // order 100 > cap
}

TEST_CASE("canonical form: worked examples") {
  Graph p3a = path_graph(3);       // 0-1-2
  Graph p3b(3);                    // 1-0-2: same path, relabelled
  p3b.add_edge(1, 0);
  p3b.add_edge(0, 2);
  CHECK(canonical_form(p3a) == canonical_form(p3b));
  CHECK(canonical_form(complete_graph(3)) != canonical_form(path_graph(3)));
  // same order and size, different component structure
  Graph two_triangles = disjoint_union(complete_graph(3), complete_graph(3));
  CHECK(canonical_form(cycle_graph(6)) != canonical_form(two_triangles));
}

TEST_CASE("canonical form agrees with brute-force isomorphism up to order 5") {
  std::vector<Graph> graphs;
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : all_graphs(n)) graphs.push_back(g);
  REQUIRE(graphs.size() == 1 + 2 + 4 + 11 + 34);
  for (size_t i = 0; i < graphs.size(); ++i)
    for (size_t j = i; j < graphs.size(); ++j) {
      bool iso = test::brute_isomorphic(graphs[i], graphs[j]);
      bool same = canonical_form(graphs[i]) == canonical_form(graphs[j]);
      CHECK(iso == same);
    }
}

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937 rng(23);
  for (int n : {6, 7, 9, 12}) {
    for (int it = 0; it < 40; ++it) {
      Graph g = test::random_graph(n, 0.35, rng);
      CHECK(canonical_form(g) == canonical_form(test::random_relabel(g, rng)));
    }
  }
  // highly symmetric inputs
  for (const Graph& g :
       {complete_multipartite_graph({4, 4, 4}), complete_graph(9),
        matching_graph(8), disjoint_union(star_graph(7), star_graph(7)),
        cycle_graph(12)}) {
    std::mt19937 r2(5);
    for (int it = 0; it < 10; ++it)
      CHECK(canonical_form(g) == canonical_form(test::random_relabel(g, r2)));
  }
}

TEST_CASE("subgraph containment: worked examples") {
  CHECK(contains_subgraph(complete_graph(4), complete_graph(3)).has_value());
  // the balanced bipartite graph on 6 vertices is triangle-free
  CHECK_FALSE(
      contains_subgraph(complete_bipartite_graph(3, 3), complete_graph(3)));
  CHECK(contains_subgraph(cycle_graph(5), path_graph(5)).has_value());
  // empty pattern embeds trivially
  CHECK(contains_subgraph(Graph(0), Graph(0)).has_value());
  CHECK(contains_subgraph(complete_graph(3), Graph(0)).has_value());
}

TEST_CASE("subgraph containment agrees with brute force") {
  std::mt19937 rng(37);
  std::vector<Graph> patterns;
  for (int n = 1; n <= 4; ++n)
    for (const Graph& g : all_graphs(n)) patterns.push_back(g);
  patterns.push_back(path_graph(5));
  patterns.push_back(cycle_graph(5));
  patterns.push_back(star_graph(5));

  for (int it = 0; it < 24; ++it) {
    Graph host = test::random_graph(7 + it % 2, 0.45, rng);
    for (const Graph& pattern : patterns) {
      auto found = contains_subgraph(host, pattern);
      CHECK(found.has_value() == test::brute_contains(host, pattern));
      if (found) CHECK(found->verify(host, pattern));
    }
  }
}

TEST_CASE("anchored containment finds copies through the new edge") {
  std::mt19937 rng(41);
  Graph pattern = complete_graph(3);
  for (int it = 0; it < 40; ++it) {
    Graph host = test::random_graph(7, 0.3, rng);
    for (auto [u, v] : host.edges()) {
      Graph without = host;
      without.remove_edge(u, v);
      bool before = contains_subgraph(without, pattern).has_value();
      bool after = contains_subgraph(host, pattern).has_value();
      auto anchored = contains_subgraph_using_edge(host, pattern, u, v);
      if (anchored) CHECK(anchored->verify(host, pattern));
      if (!before) CHECK(after == anchored.has_value());
    }
  }
}

TEST_CASE("first embedding is deterministic") {
  Graph host = complete_graph(6);
  auto a = contains_subgraph(host, path_graph(4));
  auto b = contains_subgraph(host, path_graph(4));
  REQUIRE(a);
  REQUIRE(b);
  CHECK(a->map == b->map);
}
