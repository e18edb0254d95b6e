#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "blowup/errors.hpp"

namespace blowup {

// Simple undirected graph on at most 64 vertices, adjacency stored as one
// 64-bit neighbour mask per vertex. Vertices are labelled 0..n-1. Values are
// cheap to copy and never mutated by library operations once built, so they
// can be shared freely across threads.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;
  explicit Graph(int order) : n_(order), adj_(static_cast<size_t>(order), 0) {
    if (order < 0 || order > kMaxOrder)
      throw ParameterError("graph order must be in [0, 64], got " +
                           std::to_string(order));
  }

  int order() const { return n_; }
  int size() const { return m_; }

  bool has_edge(int u, int v) const {
    return u != v && (adj_[static_cast<size_t>(u)] >> v & 1) != 0;
  }

  void add_edge(int u, int v) {
    check_pair(u, v);
    if (has_edge(u, v)) return;
    adj_[static_cast<size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<size_t>(v)] |= std::uint64_t{1} << u;
    ++m_;
  }

  void remove_edge(int u, int v) {
    check_pair(u, v);
    if (!has_edge(u, v)) return;
    adj_[static_cast<size_t>(u)] &= ~(std::uint64_t{1} << v);
    adj_[static_cast<size_t>(v)] &= ~(std::uint64_t{1} << u);
    --m_;
  }

  // Neighbour set of v as a bit mask.
  std::uint64_t neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }

  int degree(int v) const;
  int max_degree() const;

  // Mask with bits 0..n-1 set.
  std::uint64_t vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  // Edges as (u, v) pairs with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  // Subgraph induced by the vertices in `mask`, relabelled to 0..k-1 in
  // increasing original order.
  Graph induced(std::uint64_t mask) const;

  // Image of this graph under the permutation new_label = perm[old_label].
  Graph relabeled(const std::vector<int>& perm) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
      throw ParameterError("invalid vertex pair (" + std::to_string(u) + "," +
                           std::to_string(v) + ") in graph of order " +
                           std::to_string(n_));
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> adj_;
};

// Named small-graph builders. Subscripts count vertices except for
// matching_graph, which counts edges.
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);      // K_{1,n-1}
Graph matching_graph(int k);  // k disjoint edges on 2k vertices
Graph complete_bipartite_graph(int s, int t);
Graph complete_multipartite_graph(const std::vector<int>& parts);

enum class ComposeMode { kDisjointUnion, kJoin, kComplement };

// Disjoint union and join of two graphs, or the complement of `a` alone
// (`b` is ignored for kComplement).
Graph compose(const Graph& a, const Graph& b, ComposeMode mode);

Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);
Graph complement(const Graph& a);

// Connected components as vertex masks, ordered by smallest contained vertex.
std::vector<std::uint64_t> component_masks(const Graph& g);

// Drops isolated vertices and relabels the rest, preserving relative order.
Graph without_isolated_vertices(const Graph& g);

}  // namespace blowup
