#pragma once

#include <optional>
#include <string>

#include "blowup/graph.hpp"

namespace blowup {

long long binom2(long long x);

// Edge count of the balanced complete p-partite graph on n vertices.
long long t_p_edges(long long n, int p);

// h(n,p,s) = C(s-1,2) + (s-1)(n-s+1) + t_p(n-s+1); h' drops the apex clique.
long long h_edges(long long n, int p, int s);
long long h_prime_edges(long long n, int p, int s);

// Maximum edges under matching number <= nu and max degree <= delta:
// f(nu, delta) = nu*delta + floor(delta/2) * floor(nu / ceil(delta/2)),
// with f = 0 by convention when either bound is zero.
long long f_chvatal_hanson(int nu, int delta);

// Diagonal specialisations: f_diag(k) = f(k-1,k-1) in closed piecewise form,
// and the companion value g_diag(k) attained when bounded-degree split
// patterns are forbidden as well.
long long f_diag(int k);  // k^2 - k for odd k, k^2 - 3k/2 for even k
long long g_diag(int k);  // (2k^2-3k-1)/2 for odd k, k^2 - 2k + 1 for even k

struct BlowupKind {
  enum class Type { kMatching, kStar, kPath, kCycle, kClique, kCompleteBipartite };
  Type type;
  int t = 0;  // size parameter (edges for matchings, vertices otherwise)
  int s = 0;  // only for complete bipartite
};

// The base graph the kind describes (M_{2t}, S_{t+1}, P_t, C_t, K_t, K_{s,t}).
Graph blowup_base(const BlowupKind& kind);
std::string blowup_kind_name(const BlowupKind& kind);

struct FormulaResult {
  std::string kind;
  long long value = 0;
  // Every blow-up Turan value is asserted only for sufficiently large n;
  // the flag is carried so reports never silently drop the caveat.
  bool asymptotic = true;
  std::string source;
  // Set when the closed form leaves an additive constant open (the complete
  // bipartite case); the oracle's stabilisation experiment resolves it.
  std::optional<std::string> unresolved;
};

// Exact Turan number of the edge blow-up (each edge replaced by K_{p+1}) of
// the base graph described by `kind`, valid for sufficiently large n.
// Throws ParameterError when p is outside the kind's stated range.
FormulaResult ex_blowup_formula(const BlowupKind& kind, long long n, int p);

// Maximum number of edges of K_n outside all monochromatic blow-up copies
// over 2-edge-colourings, expressed as ex(n, blow-up) plus a constant
// excess. Supported where the underlying theorem applies: cliques and odd
// cycles (non-bipartite bases).
FormulaResult nim_formula(const BlowupKind& kind, long long n, int p);

}  // namespace blowup
