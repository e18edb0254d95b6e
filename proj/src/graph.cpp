#include "blowup/graph.hpp"

#include <bit>

namespace blowup {

int Graph::degree(int v) const {
  return std::popcount(adj_[static_cast<size_t>(v)]);
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    std::uint64_t later = adj_[static_cast<size_t>(u)] >> (u + 1) << (u + 1);
    while (later) {
      int v = std::countr_zero(later);
      later &= later - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(std::uint64_t mask) const {
  mask &= vertex_mask();
  std::vector<int> verts;
  for (std::uint64_t m = mask; m;) {
    int v = std::countr_zero(m);
    m &= m - 1;
    verts.push_back(v);
  }
  Graph out(static_cast<int>(verts.size()));
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (has_edge(verts[i], verts[j]))
        out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  Graph out(n_);
  for (auto [u, v] : edges()) out.add_edge(perm[static_cast<size_t>(u)],
                                           perm[static_cast<size_t>(v)]);
  return out;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw ParameterError("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star_graph(int n) {
  if (n < 1) throw ParameterError("star needs at least 1 vertex");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph matching_graph(int k) {
  Graph g(2 * k);
  for (int i = 0; i < k; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

Graph complete_bipartite_graph(int s, int t) {
  return complete_multipartite_graph({s, t});
}

Graph complete_multipartite_graph(const std::vector<int>& parts) {
  int n = 0;
  for (int p : parts) {
    if (p < 0) throw ParameterError("negative part size");
    n += p;
  }
  Graph g(n);
  int a_begin = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    int a_end = a_begin + parts[i];
    int b_begin = a_end;
    for (size_t j = i + 1; j < parts.size(); ++j) {
      int b_end = b_begin + parts[j];
      for (int u = a_begin; u < a_end; ++u)
        for (int v = b_begin; v < b_end; ++v) g.add_edge(u, v);
      b_begin = b_end;
    }
    a_begin = a_end;
  }
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  if (a.order() + b.order() > Graph::kMaxOrder)
    throw ParameterError("disjoint union exceeds the order cap of 64");
  Graph out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(a.order() + u, a.order() + v);
  return out;
}

Graph join(const Graph& a, const Graph& b) {
  Graph out = disjoint_union(a, b);
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < b.order(); ++v) out.add_edge(u, a.order() + v);
  return out;
}

Graph complement(const Graph& a) {
  Graph out(a.order());
  for (int u = 0; u < a.order(); ++u)
    for (int v = u + 1; v < a.order(); ++v)
      if (!a.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

Graph compose(const Graph& a, const Graph& b, ComposeMode mode) {
  switch (mode) {
    case ComposeMode::kDisjointUnion:
      return disjoint_union(a, b);
    case ComposeMode::kJoin:
      return join(a, b);
    case ComposeMode::kComplement:
      return complement(a);
  }
  throw ParameterError("unknown compose mode");
}

std::vector<std::uint64_t> component_masks(const Graph& g) {
  std::vector<std::uint64_t> out;
  std::uint64_t seen = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (seen >> v & 1) continue;
    std::uint64_t comp = std::uint64_t{1} << v;
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f;) {
        int u = std::countr_zero(f);
        f &= f - 1;
        next |= g.neighbors(u);
      }
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

Graph without_isolated_vertices(const Graph& g) {
  std::uint64_t keep = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0) keep |= std::uint64_t{1} << v;
  return g.induced(keep);
}

}  // namespace blowup
