#include "blowup/constructions.hpp"

#include <bit>

#include "blowup/enumerate.hpp"
#include "blowup/formulas.hpp"

namespace blowup {

std::vector<int> turan_class_sizes(int n, int p) {
  if (n < 0 || p < 1) throw ParameterError("turan graph needs n >= 0, p >= 1");
  std::vector<int> sizes(static_cast<size_t>(p));
  for (int i = 0; i < p; ++i) sizes[static_cast<size_t>(i)] = n / p + (i < n % p ? 1 : 0);
  return sizes;
}

Graph turan_graph(int n, int p) {
  return complete_multipartite_graph(turan_class_sizes(n, p));
}

Graph edge_blowup(const Graph& g, int p) {
  if (p < 2) throw ParameterError("edge blow-up needs p >= 2");
  long long order = g.order() + static_cast<long long>(p - 1) * g.size();
  if (order > Graph::kMaxOrder)
    throw ResourceError("blow-up order " + std::to_string(order) +
                        " exceeds the order cap of 64");
  Graph out(static_cast<int>(order));
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  int fresh = g.order();
  for (auto [u, v] : g.edges()) {
    std::vector<int> clique{u, v};
    for (int i = 0; i < p - 1; ++i) clique.push_back(fresh++);
    for (size_t i = 0; i < clique.size(); ++i)
      for (size_t j = i + 1; j < clique.size(); ++j)
        out.add_edge(clique[i], clique[j]);
  }
  return out;
}

Graph vertex_split(const Graph& g, std::uint64_t split_set) {
  split_set &= g.vertex_mask();
  std::vector<int> kept;  // old label -> new label for unsplit vertices
  std::vector<int> kept_index(static_cast<size_t>(g.order()), -1);
  for (int v = 0; v < g.order(); ++v) {
    if (split_set >> v & 1) continue;
    kept_index[static_cast<size_t>(v)] = static_cast<int>(kept.size());
    kept.push_back(v);
  }
  long long order = static_cast<long long>(kept.size());
  for (int v = 0; v < g.order(); ++v)
    if (split_set >> v & 1) order += g.degree(v);
  if (order > Graph::kMaxOrder)
    throw ResourceError("split order exceeds the order cap of 64");

  // new_of[u][w]: replacement vertex of split u assigned to neighbour w.
  std::vector<std::vector<int>> new_of(static_cast<size_t>(g.order()));
  int next = static_cast<int>(kept.size());
  for (int u = 0; u < g.order(); ++u) {
    if (!(split_set >> u & 1)) continue;
    new_of[static_cast<size_t>(u)].assign(static_cast<size_t>(g.order()), -1);
    std::uint64_t nb = g.neighbors(u);
    while (nb) {
      int w = std::countr_zero(nb);
      nb &= nb - 1;
      new_of[static_cast<size_t>(u)][static_cast<size_t>(w)] = next++;
    }
  }

  Graph out(static_cast<int>(order));
  for (auto [u, v] : g.edges()) {
    bool su = split_set >> u & 1, sv = split_set >> v & 1;
    if (!su && !sv) {
      out.add_edge(kept_index[static_cast<size_t>(u)],
                   kept_index[static_cast<size_t>(v)]);
    } else if (su && !sv) {
      out.add_edge(new_of[static_cast<size_t>(u)][static_cast<size_t>(v)],
                   kept_index[static_cast<size_t>(v)]);
    } else if (!su && sv) {
      out.add_edge(kept_index[static_cast<size_t>(u)],
                   new_of[static_cast<size_t>(v)][static_cast<size_t>(u)]);
    } else {
      out.add_edge(new_of[static_cast<size_t>(u)][static_cast<size_t>(v)],
                   new_of[static_cast<size_t>(v)][static_cast<size_t>(u)]);
    }
  }
  return out;
}

GraphFamily split_family(const Graph& g) {
  if (g.order() > 12)
    throw ResourceError("split family subset enumeration is capped at order 12");
  GraphFamily family;
  for (std::uint64_t subset = 0;; ++subset) {
    family.insert(vertex_split(g, subset));
    if (subset == g.vertex_mask()) break;
  }
  return family;
}

Graph h_construction(int n, int p, int s, ApexKind apex) {
  if (s < 1 || n < s - 1)
    throw ParameterError("h construction needs 1 <= s and n >= s-1");
  Graph apex_graph = apex == ApexKind::kClique ? complete_graph(s - 1)
                                               : empty_graph(s - 1);
  return join(apex_graph, turan_graph(n - s + 1, p));
}

Graph h_family_member(const HFamilySpec& spec) {
  if (spec.s < 1 || spec.n < spec.s - 1)
    throw ParameterError("family member needs 1 <= s and n >= s-1");
  if (spec.apex_graph.order() > spec.s - 1)
    throw ParameterError("apex graph does not fit on s-1 vertices");
  Graph witness = e_nu_delta_witness(spec.nu, spec.delta);
  std::vector<int> sizes = turan_class_sizes(spec.n - spec.s + 1, spec.p);
  if (witness.order() > sizes.front())
    throw ParameterError("witness does not fit in a Turan class (size " +
                         std::to_string(sizes.front()) + ")");

  Graph out = h_construction(spec.n, spec.p, spec.s, ApexKind::kIndependent);
  for (auto [u, v] : spec.apex_graph.edges()) out.add_edge(u, v);
  int class0 = spec.s - 1;  // first vertex of the first (largest) Turan class
  for (auto [u, v] : witness.edges())
    out.add_edge(class0 + u, class0 + v);
  return out;
}

Graph k_st_split(int s, int t, int a, int b) {
  if (s < 1 || t < 1 || a < 0 || b < 0 || a > s || b > t)
    throw ParameterError("k_st_split needs 0 <= a <= s and 0 <= b <= t");
  Graph base = complete_bipartite_graph(s, t);
  std::uint64_t split_set = 0;
  for (int i = 0; i < a; ++i) split_set |= std::uint64_t{1} << i;
  for (int i = 0; i < b; ++i) split_set |= std::uint64_t{1} << (s + i);
  return vertex_split(base, split_set);
}

Graph h_odd_gadget(int t) {
  if (t < 4 || t % 2 != 0)
    throw ParameterError("gadget is defined for even t >= 4");
  if (t == 4) {
    // K_4 and K_3, one K_4 edge removed, its endpoints joined to the
    // triangle by two independent edges.
    Graph g(7);
    int k4[] = {0, 1, 2, 3}, k3[] = {4, 5, 6};
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) g.add_edge(k4[i], k4[j]);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) g.add_edge(k3[i], k3[j]);
    g.remove_edge(0, 1);
    g.add_edge(0, 4);
    g.add_edge(1, 5);
    return g;
  }

  int half = t / 2;
  auto x = [&](int i) { return i - 1; };          // x_1..x_{t-1}
  auto y = [&](int i) { return t - 2 + i; };      // y_1..y_{t-1}
  int z = 2 * t - 2;
  Graph g(2 * t - 1);
  for (int i = 1; i <= t - 1; ++i)
    for (int j = i + 1; j <= t - 1; ++j) {
      g.add_edge(x(i), x(j));
      g.add_edge(y(i), y(j));
    }
  // Matching between the first halves, alternating cycle on the second
  // halves, and the extra edge between the last pair.
  for (int i = 1; i <= half - 1; ++i) g.add_edge(x(i), y(i));
  for (int j = half; j <= t - 2; ++j) g.add_edge(x(j), y(j));
  for (int j = half; j <= t - 3; ++j) g.add_edge(y(j), x(j + 1));
  g.add_edge(y(t - 2), x(half));
  g.add_edge(x(t - 1), y(t - 1));
  for (int i = 1; i <= half - 1; ++i) {
    g.add_edge(z, x(i));
    g.add_edge(z, y(i));
  }
  for (int i = 1; i <= half - 1; ++i) {
    g.remove_edge(x(i), x(half - 1 + i));
    g.remove_edge(y(i), y(half - 1 + i));
  }
  return g;
}

Graph e_nu_delta_witness(int nu, int delta) {
  if (nu < 0 || delta < 0) throw ParameterError("nu and delta must be >= 0");
  if (nu == 0 || delta == 0) return Graph(0);
  if (static_cast<long long>(nu) * (delta + 1) > Graph::kMaxOrder)
    throw ResourceError("witness order would exceed the order cap of 64");

  Graph out(0);
  if (delta % 2 == 0) {
    // Odd-order cliques fill the matching budget exactly; stars take the
    // remainder.
    int c = nu / (delta / 2);
    int r = nu - c * (delta / 2);
    for (int i = 0; i < c; ++i) out = disjoint_union(out, complete_graph(delta + 1));
    for (int i = 0; i < r; ++i) out = disjoint_union(out, star_graph(delta + 1));
  } else if (nu < (delta + 1) / 2) {
    for (int i = 0; i < nu; ++i) out = disjoint_union(out, star_graph(delta + 1));
  } else if (nu == delta) {
    out = delta == 1 ? complete_graph(2) : h_odd_gadget(delta + 1);
  } else {
    // Odd delta off the diagonal: replicate the extremal block for
    // (ceil(delta/2), delta) found by exhaustive search, stars for the rest.
    int unit = (delta + 1) / 2;
    if (static_cast<long long>(unit) * (delta + 1) > 20)
      throw ResourceError("witness search base exceeds the generation budget");
    Graph block = max_edges_nu_delta(unit, delta).witness;
    block = without_isolated_vertices(block);
    int c = nu / unit;
    int r = nu - c * unit;
    for (int i = 0; i < c; ++i) out = disjoint_union(out, block);
    for (int i = 0; i < r; ++i) out = disjoint_union(out, star_graph(delta + 1));
  }
  if (out.size() != f_chvatal_hanson(nu, delta))
    throw std::logic_error("internal: witness construction missed f(nu, delta)");
  return out;
}

GraphFamily k_family(int t) {
  if (t < 3) throw ParameterError("split-pattern family needs t >= 3");
  GraphFamily family;
  for (int a = 1; a <= t; ++a) {
    int b = t + 1 - a;
    for (int c = 0; c <= b; ++c) {
      if (a < 3 && c != 0) continue;
      long long order = a + b + static_cast<long long>(c) * (a - 1);
      if (order > Graph::kMaxOrder)
        throw ResourceError("split pattern exceeds the order cap of 64");
      family.insert(k_st_split(a, b, 0, c));
    }
  }
  return family;
}

}  // namespace blowup
