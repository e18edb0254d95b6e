#include <doctest.h>

#include <map>
#include <set>

#include "blowup/canonical.hpp"
#include "blowup/constructions.hpp"
#include "blowup/enumerate.hpp"
#include "blowup/formulas.hpp"
#include "blowup/invariants.hpp"
#include "blowup/subgraph.hpp"
#include "test_util.hpp"

using namespace blowup;

namespace {

// Linear forests with k edges, built independently from the partitions of k.
GraphFamily linear_forests(int k) {
  GraphFamily out;
  std::vector<int> parts;
  auto recurse = [&](auto&& self, int remaining, int largest) -> void {
    if (remaining == 0) {
      Graph forest(0);
      for (int part : parts) forest = disjoint_union(forest, path_graph(part + 1));
      out.insert(forest);
      return;
    }
    for (int part = std::min(remaining, largest); part >= 1; --part) {
      parts.push_back(part);
      self(self, remaining - part, part);
      parts.pop_back();
    }
  };
  recurse(recurse, k, k);
  return out;
}

}  // namespace

TEST_CASE("turan graphs") {
  CHECK(turan_graph(5, 2) == complete_bipartite_graph(3, 2));
  Graph t73 = turan_graph(7, 3);
  CHECK(t73.size() == 16);
  CHECK(turan_class_sizes(7, 3) == std::vector<int>{3, 2, 2});
  CHECK(canonical_form(turan_graph(4, 7)) == canonical_form(complete_graph(4)));
  CHECK_FALSE(contains_subgraph(turan_graph(9, 3), complete_graph(4)));
  for (int n = 0; n <= 24; ++n)
    for (int p = 1; p <= 5; ++p)
      CHECK(turan_graph(n, p).size() == t_p_edges(n, p));
}

TEST_CASE("edge blow-up: worked examples") {
  CHECK(canonical_form(edge_blowup(matching_graph(1), 2)) ==
        canonical_form(complete_graph(3)));

  Graph bowtie = edge_blowup(star_graph(3), 2);
  CHECK(bowtie.order() == 5);
  CHECK(bowtie.size() == 6);
  // two triangles sharing the centre: centre has degree 4
  CHECK(bowtie.max_degree() == 4);
  CHECK(matching_number(bowtie) == 2);

  Graph k3_blown = edge_blowup(complete_graph(3), 3);
  CHECK(k3_blown.order() == 9);
  CHECK(k3_blown.size() == 18);

  CHECK_THROWS_AS(edge_blowup(complete_graph(3), 1), ParameterError);
  CHECK_THROWS_AS(edge_blowup(complete_graph(8), 5), ResourceError);
}

TEST_CASE("edge blow-up identities over all small bases") {
  std::mt19937 rng(19);
  std::vector<Graph> bases;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : all_graphs(n)) bases.push_back(g);
  for (int n = 7; n <= 8; ++n)
    for (int it = 0; it < 60; ++it)
      bases.push_back(test::random_graph(n, 0.4, rng));
  for (const Graph& base : bases) {
    for (int p = 2; p <= 5; ++p) {
      if (base.order() + static_cast<long long>(p - 1) * base.size() > 64)
        continue;
      Graph blown = edge_blowup(base, p);
      CHECK(blown.order() == base.order() + (p - 1) * base.size());
      CHECK(blown.size() == base.size() * p * (p + 1) / 2);
    }
  }
}

TEST_CASE("vertex split: worked examples") {
  // splitting the centre of P_3 gives two disjoint edges
  CHECK(canonical_form(vertex_split(path_graph(3), 0b010)) ==
        canonical_form(matching_graph(2)));
  CHECK(canonical_form(vertex_split(cycle_graph(4), 0b0001)) ==
        canonical_form(path_graph(5)));
  CHECK(canonical_form(vertex_split(complete_graph(3), 0b111)) ==
        canonical_form(matching_graph(3)));
  // splitting nothing is the identity
  CHECK(vertex_split(cycle_graph(5), 0) == cycle_graph(5));
}

TEST_CASE("vertex split preserves edge count for all subsets up to order 6") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : all_graphs(n))
      for (std::uint64_t subset = 0;; ++subset) {
        CHECK(vertex_split(g, subset).size() == g.size());
        if (subset == g.vertex_mask()) break;
      }
}

TEST_CASE("split family: worked examples") {
  GraphFamily p4_family = split_family(path_graph(4));
  CHECK(p4_family == linear_forests(3));
  CHECK(p4_family.size() == 3);  // P_4, P_3+P_2, 3 P_2

  GraphFamily k3_family = split_family(complete_graph(3));
  GraphFamily expected_k3{complete_graph(3), path_graph(4),
                          disjoint_union(path_graph(3), path_graph(2)),
                          matching_graph(3)};
  CHECK(k3_family == expected_k3);

  GraphFamily c4_family = split_family(cycle_graph(4));
  GraphFamily expected_c4 = linear_forests(4);
  expected_c4.insert(cycle_graph(4));
  CHECK(c4_family == expected_c4);

  CHECK_THROWS_AS(split_family(Graph(13)), ResourceError);
}

TEST_CASE("split families of paths are exactly the linear forests") {
  for (int k = 1; k <= 5; ++k)
    CHECK(split_family(path_graph(k + 1)) == linear_forests(k));
}

TEST_CASE("split family members keep the edge count") {
  for (const Graph& base : {star_graph(4), cycle_graph(5), complete_graph(4)})
    for (const Graph& member : split_family(base).members())
      CHECK(member.size() == base.size());
}

TEST_CASE("h constructions: worked examples") {
  CHECK(h_construction(10, 2, 2, ApexKind::kClique).size() == 29);
  CHECK(h_construction(10, 3, 3, ApexKind::kIndependent).size() == 37);
  CHECK(h_construction(12, 3, 1, ApexKind::kClique) == turan_graph(12, 3));
  CHECK(h_construction(12, 3, 1, ApexKind::kIndependent) == turan_graph(12, 3));
}

TEST_CASE("h construction edge counts match the closed forms") {
  for (int s = 1; s <= 5; ++s)
    for (int n = s - 1; n <= 40; ++n)
      for (int p = 1; p <= 4; ++p) {
        CHECK(h_construction(n, p, s, ApexKind::kClique).size() ==
              h_edges(n, p, s));
        CHECK(h_construction(n, p, s, ApexKind::kIndependent).size() ==
              h_prime_edges(n, p, s));
      }
}

TEST_CASE("family members: worked examples") {
  // nu = delta = 0 with a complete apex degenerates to the clique-apex form
  HFamilySpec plain{10, 2, 3, 0, 0, complete_graph(2)};
  CHECK(h_family_member(plain) == h_construction(10, 2, 3, ApexKind::kClique));

  HFamilySpec with_witness{20, 2, 1, 2, 2, Graph(0)};
  CHECK(h_family_member(with_witness).size() == t_p_edges(20, 2) + 6);

  HFamilySpec with_apex_edge{20, 2, 3, 0, 0, matching_graph(1)};
  CHECK(h_family_member(with_apex_edge).size() == h_prime_edges(20, 2, 3) + 1);

  // witness too large for a class
  CHECK_THROWS_AS(h_family_member(HFamilySpec{7, 2, 1, 2, 2, Graph(0)}),
                  ParameterError);
  // apex graph too large
  CHECK_THROWS_AS(h_family_member(HFamilySpec{10, 2, 2, 0, 0, path_graph(3)}),
                  ParameterError);
}

TEST_CASE("split patterns of complete bipartite graphs") {
  CHECK(canonical_form(k_st_split(2, 2, 0, 1)) == canonical_form(path_graph(5)));
  CHECK(canonical_form(k_st_split(2, 2, 0, 0)) == canonical_form(cycle_graph(4)));
  Graph g = k_st_split(2, 3, 1, 0);
  CHECK(g.order() == 7);
  CHECK(g.size() == 6);
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 3; ++b) {
      Graph split = k_st_split(2, 3, a, b);
      CHECK(split.size() == 6);
      CHECK(split.order() == 5 + a * 2 + b * 1);
    }
  CHECK_THROWS_AS(k_st_split(2, 3, 3, 0), ParameterError);
}

TEST_CASE("gadget: worked examples") {
  Graph h7 = h_odd_gadget(4);
  CHECK(h7.order() == 7);
  CHECK(h7.size() == 10);
  Graph h11 = h_odd_gadget(6);
  CHECK(h11.order() == 11);
  CHECK(h11.size() == 27);
  CHECK(h11.max_degree() == 5);
  CHECK(matching_number(h11) == 5);
  CHECK_THROWS_AS(h_odd_gadget(5), ParameterError);
  CHECK_THROWS_AS(h_odd_gadget(2), ParameterError);
}

TEST_CASE("gadget invariants for t = 4, 6, 8") {
  for (int t : {4, 6, 8}) {
    Graph gadget = h_odd_gadget(t);
    CHECK(gadget.order() == 2 * t - 1);
    CHECK(gadget.max_degree() == t - 1);
    CHECK(matching_number(gadget) == t - 1);
    CHECK(gadget.size() == f_chvatal_hanson(t - 1, t - 1));
  }
}

TEST_CASE("witness graphs: worked examples") {
  CHECK(canonical_form(e_nu_delta_witness(1, 1)) ==
        canonical_form(matching_graph(1)));
  CHECK(canonical_form(e_nu_delta_witness(2, 2)) ==
        canonical_form(disjoint_union(complete_graph(3), complete_graph(3))));
  Graph w33 = e_nu_delta_witness(3, 3);
  CHECK(w33.size() == 10);
  CHECK(e_nu_delta_witness(0, 5).order() == 0);
  CHECK(e_nu_delta_witness(5, 0).order() == 0);
}

TEST_CASE("witness graphs satisfy the constraints and attain the maximum") {
  for (int nu = 1; nu <= 4; ++nu)
    for (int delta = 1; delta <= 4; ++delta) {
      Graph w = e_nu_delta_witness(nu, delta);
      CHECK(w.max_degree() <= delta);
      CHECK(matching_number(w) <= nu);
      CHECK(w.size() == f_chvatal_hanson(nu, delta));
      // exhaustive search confirms no better graph exists
      CHECK(max_edges_nu_delta(nu, delta).value == w.size());
    }
}

TEST_CASE("split-pattern family contents") {
  GraphFamily k4 = k_family(4);
  // K_{1,4}, K_{2,3} and, for a >= 3, the split variants
  CHECK(k4.contains_isomorph(star_graph(5)));
  CHECK(k4.contains_isomorph(complete_bipartite_graph(2, 3)));
  CHECK(k4.contains_isomorph(k_st_split(3, 2, 0, 2)));
  CHECK_FALSE(k4.contains_isomorph(k_st_split(2, 3, 0, 1)));
}
