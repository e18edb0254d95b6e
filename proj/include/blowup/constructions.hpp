#pragma once

#include <cstdint>
#include <vector>

#include "blowup/family.hpp"
#include "blowup/graph.hpp"

namespace blowup {

// Balanced complete p-partite graph on n vertices. Class sizes differ by at
// most one and the first class is a largest one.
Graph turan_graph(int n, int p);
std::vector<int> turan_class_sizes(int n, int p);

// Replace every edge of g by a clique on p+1 vertices; the p-1 new vertices
// of distinct edges are distinct. Original vertices keep their labels.
Graph edge_blowup(const Graph& g, int p);

// Simultaneously split every vertex u in `split_set`: u is replaced by
// deg(u) independent vertices, each adjacent to exactly one former
// neighbour. An edge between two split vertices becomes an isolated edge.
// Edge count is preserved.
Graph vertex_split(const Graph& g, std::uint64_t split_set);

// All graphs obtainable from g by splitting some vertex subset, up to
// isomorphism. Subset enumeration is capped at order 12.
GraphFamily split_family(const Graph& g);

enum class ApexKind { kClique, kIndependent };

// K_{s-1} + T_p(n-s+1) (clique apex) or its independent-apex variant.
Graph h_construction(int n, int p, int s, ApexKind apex);

// One member of the extremal family: an independent-apex construction with a
// bounded-matching/bounded-degree witness placed in the first Turan class
// and a prescribed graph placed on the apex vertices.
struct HFamilySpec {
  int n = 0;
  int p = 1;
  int s = 1;
  int nu = 0;
  int delta = 0;
  Graph apex_graph;  // at most s-1 vertices
};

Graph h_family_member(const HFamilySpec& spec);

// K_{s,t} with a vertices of the s-side and b vertices of the t-side split.
Graph k_st_split(int s, int t, int a, int b);

// The order-(2t-1) gadget with max degree and matching number both t-1 and
// the maximum edge count possible under those bounds (t even, t >= 4).
Graph h_odd_gadget(int t);

// A graph with matching number <= nu, max degree <= delta and the maximum
// possible edge count f(nu, delta).
Graph e_nu_delta_witness(int nu, int delta);

// The split-pattern family {K_{a,b}(0,c) : a+b = t+1, a >= 3 or c = 0}.
GraphFamily k_family(int t);

}  // namespace blowup
