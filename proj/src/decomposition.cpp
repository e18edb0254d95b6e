#include "blowup/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "blowup/constructions.hpp"
#include "blowup/formulas.hpp"
#include "blowup/invariants.hpp"

namespace blowup {

namespace {

// All distinct candidate graphs F[V_0] over remainders V_0 whose complement
// splits into p-1 independent sets, isolated vertices stripped.
std::vector<Graph> induced_candidates(const Graph& f, int p, int t_max) {
  if (p < 2) throw ParameterError("decomposition needs p >= 2");
  if (f.order() > 12)
    throw ResourceError("definition search is capped at |V(F)| <= 12");
  if (t_max < 0) t_max = f.order();
  long long host_order =
      static_cast<long long>(f.order()) + t_max +
      static_cast<long long>(p - 1) * t_max;
  if (host_order > Graph::kMaxOrder)
    throw ResourceError("definition-search host exceeds the order cap of 64");

  std::map<std::string, Graph> seen;
  const std::uint64_t full = f.vertex_mask();
  for (std::uint64_t removed = 0;; ++removed) {
    Graph outside = f.induced(removed);
    if (k_colorable(outside, p - 1)) {
      Graph candidate = without_isolated_vertices(f.induced(full & ~removed));
      if (candidate.size() == 0)
        throw ParameterError(
            "F is (p)-colourable; its decomposition family degenerates");
      seen.emplace(canonical_form(candidate).value, std::move(candidate));
    }
    if (removed == full) break;
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (auto& [label, g] : seen) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> minimal_under_containment(std::vector<Graph> graphs) {
  std::sort(graphs.begin(), graphs.end(), [](const Graph& a, const Graph& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.order() < b.order();
  });
  std::vector<Graph> kept;
  for (const Graph& g : graphs) {
    bool dominated = false;
    for (const Graph& k : kept)
      if (contains_subgraph(g, k)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(g);
  }
  return kept;
}

}  // namespace

DecompositionFamily decomposition_family_blowup(const Graph& g, int p) {
  int chi = chromatic_number(g);
  if (chi < 2 || chi > p - 1)
    throw ParameterError(
        "split shortcut needs 2 <= chi(base) <= p-1; chi = " +
        std::to_string(chi) + ", p = " + std::to_string(p));
  DecompositionFamily out;
  // Family members are minimal, so isolated vertices (possible when the base
  // has them) are dropped; every split result keeps the base's edge count,
  // which rules out any other containment among members.
  for (const Graph& m : split_family(g).members())
    out.members.insert(without_isolated_vertices(m));
  out.provenance = Provenance::kSplitShortcut;
  out.p = p;
  out.base = g;
  return out;
}

DecompositionFamily decomposition_family_direct(const Graph& f, int p,
                                                int t_max) {
  DecompositionFamily out;
  out.provenance = Provenance::kDefinitionSearch;
  out.p = p;
  for (const Graph& m : minimal_under_containment(induced_candidates(f, p, t_max)))
    out.members.insert(m);
  return out;
}

bool decomposition_member_works(const Graph& f, int p, const Graph& m,
                                int t_max) {
  for (const Graph& candidate : induced_candidates(f, p, t_max))
    if (contains_subgraph(m, candidate)) return true;
  return false;
}

std::optional<Embedding> decomposition_host_embedding(const Graph& f, int p,
                                                      const Graph& m,
                                                      int t_max) {
  if (t_max < 0) t_max = f.order();
  Graph class0 = disjoint_union(m, empty_graph(t_max));
  Graph host = join(class0, complete_multipartite_graph(
                                std::vector<int>(static_cast<size_t>(p - 1),
                                                 t_max)));
  return contains_subgraph(host, f);
}

ParamRecord derive_params(const DecompositionFamily& family) {
  ParamRecord out;
  std::vector<Graph> members = family.members.members();

  int q = -1;
  for (const Graph& m : members)
    if (auto icn = independent_covering_number(m))
      if (q < 0 || icn->size < q) q = icn->size;
  if (q < 0)
    throw ParameterError(
        "decomposition family invariant violated: no bipartite member");
  out.q = q;

  out.k = -1;
  for (const Graph& m : members) {
    auto icn = independent_covering_number(m);
    if (!icn || icn->size != q) continue;
    for (std::uint64_t covering : min_independent_coverings(m)) {
      out.s_witnesses.push_back({m, covering});
      for (std::uint64_t c = covering; c;) {
        int v = std::countr_zero(c);
        c &= c - 1;
        if (out.k < 0 || m.degree(v) < out.k) out.k = m.degree(v);
      }
    }
  }

  // Covering-induced subgraphs over all members, coverings of order <= q-1.
  std::vector<Graph> covering_graphs;
  std::map<std::string, bool> seen;
  for (const Graph& m : members) {
    const auto edges = m.edges();
    std::vector<int> pick;
    auto enumerate = [&](auto&& self, int first, int remaining) -> void {
      std::uint64_t mask = 0;
      for (int v : pick) mask |= std::uint64_t{1} << v;
      bool covers = true;
      for (auto [a, b] : edges)
        if (!(mask >> a & 1) && !(mask >> b & 1)) {
          covers = false;
          break;
        }
      if (covers) {
        Graph induced = without_isolated_vertices(m.induced(mask));
        if (induced.size() == 0)
          throw std::logic_error(
              "internal: independent covering below the family minimum");
        std::string label = canonical_form(induced).value;
        if (seen.emplace(label, true).second)
          covering_graphs.push_back(std::move(induced));
      }
      if (remaining == 0) return;
      for (int v = first; v < m.order(); ++v) {
        pick.push_back(v);
        self(self, v + 1, remaining - 1);
        pick.pop_back();
      }
    };
    if (q >= 1) enumerate(enumerate, 0, q - 1);
  }

  if (covering_graphs.empty()) {
    out.b_sentinel = true;  // beta(member) >= q throughout: B = {K_q}
  } else {
    for (const Graph& g : minimal_under_containment(std::move(covering_graphs)))
      out.b.insert(g);
  }
  return out;
}

long long ExBounds::lower(long long n) const {
  return h_prime_edges(n, 1, q) + ex_q1_b;
}

long long ExBounds::upper(long long n) const {
  if (equality) return lower(n);
  return h_edges(n, 1, q) + f_chvatal_hanson(k - 1, k - 1);
}

ExBounds decomposition_ex_bounds(const DecompositionFamily& family,
                                 const ParamRecord& params,
                                 const OracleOptions& options) {
  ExBounds out;
  out.q = params.q;
  out.k = params.k;
  if (params.b_sentinel) {
    // K_q cannot embed on q-1 vertices, so the complete graph is extremal.
    out.ex_q1_b = binom2(params.q - 1);
  } else if (params.q <= 1) {
    out.ex_q1_b = 0;
  } else {
    out.ex_q1_b = exact_ex(params.q - 1, params.b, options).value;
  }
  if (family.base) {
    auto part = bipartition(*family.base);
    if (!part) {
      out.equality = true;
    } else {
      int a = std::popcount(part->side_a);
      out.equality = params.q < a;
    }
  }
  return out;
}

}  // namespace blowup
