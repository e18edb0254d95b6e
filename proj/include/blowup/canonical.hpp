#pragma once

#include <compare>
#include <string>

#include "blowup/graph.hpp"

namespace blowup {

// Isomorphism-invariant key: the graph6 string of a canonically relabelled
// copy of the graph. Equal keys iff isomorphic; ordinary string comparison
// gives a deterministic, platform-independent total order.
struct CanonicalLabel {
  std::string value;

  auto operator<=>(const CanonicalLabel&) const = default;
};

CanonicalLabel canonical_form(const Graph& g);

// The canonically relabelled graph itself (graph6_encode of it equals the
// canonical label).
Graph canonical_graph(const Graph& g);

}  // namespace blowup
