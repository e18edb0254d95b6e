#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "blowup/family.hpp"
#include "blowup/graph.hpp"
#include "blowup/oracle.hpp"
#include "blowup/subgraph.hpp"

namespace blowup {

enum class Provenance { kSplitShortcut, kDefinitionSearch };

// The minimal graphs whose insertion into one class of a large balanced
// p-partite host creates the forbidden graph. Members are deduplicated up to
// isomorphism; at least one is always bipartite.
struct DecompositionFamily {
  GraphFamily members;
  Provenance provenance = Provenance::kDefinitionSearch;
  int p = 2;
  std::optional<Graph> base;  // blow-up base, when the family came from one
};

// Shortcut: for 2 <= chi(g) <= p-1 the decomposition family of the edge
// blow-up of g is exactly the split family of g.
DecompositionFamily decomposition_family_blowup(const Graph& g, int p);

// Definition search. M qualifies iff f embeds into (M + spare isolated
// vertices) joined with a complete (p-1)-partite graph with classes of size
// t_max; with t_max = |V(f)| (the default) that is equivalent to: V(f) splits
// into p-1 independent sets plus a remainder whose induced subgraph lands
// inside M. The search enumerates the 2^|V(f)| remainders and keeps the
// containment-minimal induced graphs. Cap: |V(f)| <= 12.
DecompositionFamily decomposition_family_direct(const Graph& f, int p,
                                                int t_max = -1);

// Does placing m (plus spill) in one class create f? Replays the definition
// for a single candidate graph.
bool decomposition_member_works(const Graph& f, int p, const Graph& m,
                                int t_max = -1);

// Literal replay certificate: assemble (m U empty spill) + T_{p-1}((p-1)t)
// and search for f in it.
std::optional<Embedding> decomposition_host_embedding(const Graph& f, int p,
                                                      const Graph& m,
                                                      int t_max = -1);

struct SWitness {
  Graph member;            // family member carrying the covering
  std::uint64_t covering;  // minimum independent covering, as a vertex mask
};

struct ParamRecord {
  int q = 0;  // minimum independent covering order over bipartite members
  std::vector<SWitness> s_witnesses;  // all independent coverings of order q
  GraphFamily b;        // covering-induced subgraphs (containment-minimal)
  bool b_sentinel = false;  // no covering of order <= q-1 exists: B = {K_q}
  int k = 0;  // min degree of a covering vertex inside its member
};

ParamRecord derive_params(const DecompositionFamily& family);

// Closed-form bound evaluators for ex(n, family) as functions of n.
// `equality` holds when the blow-up base is non-bipartite or admits an
// independent covering smaller than its colour class A; the bounds then
// coincide at lower(n).
struct ExBounds {
  int q = 0;
  int k = 0;
  long long ex_q1_b = 0;  // ex(q-1, B); C(q-1,2) in the sentinel case
  bool equality = false;

  long long lower(long long n) const;
  long long upper(long long n) const;
};

ExBounds decomposition_ex_bounds(const DecompositionFamily& family,
                                 const ParamRecord& params,
                                 const OracleOptions& options = {});

}  // namespace blowup
