#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "blowup/graph.hpp"

namespace blowup {

// Exact chromatic number by branch and bound over colour classes.
// Budget: order <= 20 (ResourceError beyond).
int chromatic_number(const Graph& g);

// Can g be properly coloured with at most k colours?
bool k_colorable(const Graph& g, int k);

struct MatchingResult {
  int size = 0;
  std::vector<std::pair<int, int>> edges;  // a witness maximum matching
};

// Exact maximum matching via augmenting paths with blossom contraction.
MatchingResult maximum_matching(const Graph& g);
int matching_number(const Graph& g);

struct CoverResult {
  int size = 0;
  std::uint64_t vertices = 0;  // a witness minimum vertex cover
};

// Exact minimum vertex cover. Budget: order <= 32.
CoverResult minimum_vertex_cover(const Graph& g);
int covering_number(const Graph& g);

// Two-colouring with no edge inside either side and |side_a| <= |side_b|.
// For disconnected graphs every component contributes its smaller colour
// class to side_a, so |side_a| is the minimum over all valid bipartitions;
// isolated vertices land in side_b.
struct Bipartition {
  std::uint64_t side_a = 0;
  std::uint64_t side_b = 0;
};

std::optional<Bipartition> bipartition(const Graph& g);

struct IndependentCovering {
  int size = 0;
  std::uint64_t vertices = 0;
};

// Minimum independent set meeting every edge; absent when g is not
// bipartite. Equals the sum of min(|A_c|, |B_c|) over edge-bearing
// components.
std::optional<IndependentCovering> independent_covering_number(const Graph& g);

// Every minimum-order independent covering (one choice of colour class per
// edge-bearing component, both when the classes tie).
std::vector<std::uint64_t> min_independent_coverings(const Graph& g);

// nu(G) = nu(G - v) = floor(|V|/2) for every vertex v.
bool is_factor_critical(const Graph& g);

}  // namespace blowup
