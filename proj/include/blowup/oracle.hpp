#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blowup/cache.hpp"
#include "blowup/family.hpp"
#include "blowup/graph.hpp"
#include "blowup/subgraph.hpp"

namespace blowup {

struct OracleOptions {
  OracleCache* cache = nullptr;
  bool paranoid = false;  // replay-verify cache hits instead of trusting them
  int threads = 0;
  int guard_n = 10;  // exhaustive-search feasibility guard
};

struct OracleResult {
  int n = 0;
  std::string family_key;
  long long value = 0;
  std::vector<std::string> witnesses;  // every extremal graph, canonical graph6
  std::uint64_t explored = 0;          // family-free graphs visited
};

// Exact maximum edge count of a family-free graph on n vertices, with all
// extremal graphs up to isomorphism, by exhaustive canonical-deduplicated
// edge augmentation (freeness is closed under edge deletion, so pruning at
// the first forbidden copy is sound).
OracleResult exact_ex(int n, const GraphFamily& family,
                      const OracleOptions& options = {});

struct NimResult {
  int n = 0;
  std::string pattern;  // graph6
  long long value = 0;
  std::vector<std::pair<int, int>> red_edges;  // witness colouring (rest blue)
  std::vector<std::pair<int, int>> nim_edges;
};

// Exact maximum, over 2-edge-colourings of K_n, of the number of edges not
// contained in any monochromatic copy of `pattern`. Guards: n <= 7 and
// |V(pattern)| <= 6. The colour of the first edge is fixed to break the
// swap symmetry.
NimResult exact_nim_g(int n, const Graph& pattern,
                      const OracleOptions& options = {});

struct FreenessCertificate {
  bool free = true;
  int member = -1;               // index into family.members() when not free
  std::optional<Embedding> embedding;
};

// True iff no family member embeds into g; otherwise the certificate names
// the member and a replayable embedding.
FreenessCertificate verify_free(const Graph& g, const GraphFamily& family);

struct StabilizeResult {
  int s = 0, t = 0, p = 0;
  GraphFamily family;  // split patterns of K_{s,t}
  std::vector<std::pair<int, long long>> differences;  // (n, ex - h'(n,1,s))
  bool stabilized = false;  // last two differences agree
  std::uint64_t explored = 0;
};

// Difference sequence ex(n, split family of K_{s,t}) - (s-1)(n-s+1) over a
// range of n; its eventual constant value is the additive constant left open
// by the complete-bipartite blow-up formula.
StabilizeResult stabilize_p_st(int s, int t, int p, int n_min, int n_max,
                               const OracleOptions& options = {});

}  // namespace blowup
