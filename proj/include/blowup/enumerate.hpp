#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "blowup/graph.hpp"

namespace blowup {

// Admission test for the generated class: called on a candidate obtained by
// adding edge (u, v) to an already admitted graph. The class must be closed
// under edge deletion (then every admitted graph is reachable from the empty
// graph by admitted single-edge additions, and the level search below is
// exhaustive).
using EdgePredicate = std::function<bool(const Graph&, int u, int v)>;

struct GenerationResult {
  int max_edges = 0;
  std::vector<Graph> extremal;     // admitted graphs with max_edges edges
  std::uint64_t total_graphs = 0;  // all admitted graphs on n vertices, up to iso
};

struct GenerationOptions {
  int threads = 0;  // 0 = use BLOWUP_THREADS or hardware_concurrency
  std::function<void(const Graph&)> visit;  // called once per admitted graph
};

// Exhaustive generation of all admitted graphs on exactly n labelled-capacity
// vertices (isolated vertices included), deduplicated up to isomorphism level
// by level on the edge count.
GenerationResult generate_admitted(int n, const EdgePredicate& admits,
                                   const GenerationOptions& options = {});

// Number of graphs on exactly n vertices up to isomorphism (generator
// self-test values: 34, 156 and 1044 for n = 5, 6, 7).
std::uint64_t count_all_graphs(int n);

// Every graph on exactly n vertices up to isomorphism, in generation order.
std::vector<Graph> all_graphs(int n);

struct ConstrainedMax {
  long long value = 0;
  Graph witness;
};

// Maximum edge count over graphs with matching number <= nu and maximum
// degree <= delta, by exhaustive generation on nu*(delta+1) vertices (enough
// capacity for every extremal graph of the problem).
ConstrainedMax max_edges_nu_delta(int nu, int delta);

}  // namespace blowup
