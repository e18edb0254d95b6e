#pragma once

#include <optional>
#include <vector>

#include "blowup/graph.hpp"

namespace blowup {

// Injective vertex map from pattern to host under which every pattern edge
// lands on a host edge (ordinary, not induced, subgraph containment).
struct Embedding {
  std::vector<int> map;  // map[pattern vertex] = host vertex

  bool verify(const Graph& host, const Graph& pattern) const;
};

// First embedding of `pattern` into `host`, or nullopt. Pattern vertices are
// matched in descending-degree order (ties by index) and host candidates are
// tried in increasing index order, so the returned embedding is a
// deterministic function of the two graphs. The empty pattern embeds
// trivially.
std::optional<Embedding> contains_subgraph(const Graph& host,
                                           const Graph& pattern);

// Like contains_subgraph, but restricted to embeddings in which some pattern
// edge maps onto the host edge {hu, hv}. Used for incremental freeness
// checks: when the host was pattern-free before this edge was added, any new
// copy must use it.
std::optional<Embedding> contains_subgraph_using_edge(const Graph& host,
                                                      const Graph& pattern,
                                                      int hu, int hv);

}  // namespace blowup
