#include "blowup/invariants.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace blowup {

namespace {

// Greedy clique on a descending-degree order; a quick lower bound for chi.
int greedy_clique_bound(const Graph& g) {
  std::vector<int> verts(static_cast<size_t>(g.order()));
  std::iota(verts.begin(), verts.end(), 0);
  std::stable_sort(verts.begin(), verts.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  int best = 0;
  for (int start : verts) {
    std::uint64_t clique = std::uint64_t{1} << start;
    std::uint64_t cand = g.neighbors(start);
    while (cand) {
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      bool joined = true;
      for (std::uint64_t c = clique; c;) {
        int u = std::countr_zero(c);
        c &= c - 1;
        if (!g.has_edge(u, v)) {
          joined = false;
          break;
        }
      }
      if (joined) clique |= std::uint64_t{1} << v;
    }
    best = std::max(best, std::popcount(clique));
  }
  return best;
}

struct ColorSearch {
  const Graph& g;
  std::vector<int> order;
  std::vector<int> color;
  int k;

  bool extend(size_t i, int used) {
    if (i == order.size()) return true;
    int v = order[i];
    std::uint64_t nb = g.neighbors(v);
    int avail = std::min(used + 1, k);
    for (int c = 0; c < avail; ++c) {
      bool clash = false;
      for (std::uint64_t m = nb; m;) {
        int u = std::countr_zero(m);
        m &= m - 1;
        if (color[static_cast<size_t>(u)] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      color[static_cast<size_t>(v)] = c;
      if (extend(i + 1, std::max(used, c + 1))) return true;
      color[static_cast<size_t>(v)] = -1;
    }
    return false;
  }
};

}  // namespace

bool k_colorable(const Graph& g, int k) {
  if (k < 0) return g.order() == 0;
  if (g.order() <= k) return true;
  if (k == 0) return g.order() == 0;
  if (k == 1) return g.size() == 0;
  ColorSearch s{g, {}, std::vector<int>(static_cast<size_t>(g.order()), -1), k};
  s.order.resize(static_cast<size_t>(g.order()));
  std::iota(s.order.begin(), s.order.end(), 0);
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return s.extend(0, 0);
}

int chromatic_number(const Graph& g) {
  if (g.order() > 20)
    throw ResourceError("exact chromatic number budget is order <= 20, got " +
                        std::to_string(g.order()));
  if (g.order() == 0) return 0;
  for (int k = greedy_clique_bound(g);; ++k)
    if (k_colorable(g, k)) return k;
}

MatchingResult maximum_matching(const Graph& g) {
  const int n = g.order();
  std::vector<int> match(static_cast<size_t>(n), -1);
  std::vector<int> parent(static_cast<size_t>(n)), base(static_cast<size_t>(n));
  std::vector<bool> used(static_cast<size_t>(n)), in_blossom(static_cast<size_t>(n));

  auto lca = [&](int a, int b) {
    std::vector<bool> mark(static_cast<size_t>(n), false);
    for (;;) {
      a = base[static_cast<size_t>(a)];
      mark[static_cast<size_t>(a)] = true;
      if (match[static_cast<size_t>(a)] == -1) break;
      a = parent[static_cast<size_t>(match[static_cast<size_t>(a)])];
    }
    for (;;) {
      b = base[static_cast<size_t>(b)];
      if (mark[static_cast<size_t>(b)]) return b;
      b = parent[static_cast<size_t>(match[static_cast<size_t>(b)])];
    }
  };

  auto mark_path = [&](int v, int b, int child) {
    while (base[static_cast<size_t>(v)] != b) {
      in_blossom[static_cast<size_t>(base[static_cast<size_t>(v)])] = true;
      in_blossom[static_cast<size_t>(
          base[static_cast<size_t>(match[static_cast<size_t>(v)])])] = true;
      parent[static_cast<size_t>(v)] = child;
      child = match[static_cast<size_t>(v)];
      v = parent[static_cast<size_t>(child)];
    }
  };

  auto find_augmenting = [&](int root) -> int {
    std::fill(used.begin(), used.end(), false);
    std::fill(parent.begin(), parent.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    used[static_cast<size_t>(root)] = true;
    std::vector<int> queue{root};
    for (size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      std::uint64_t nb = g.neighbors(v);
      while (nb) {
        int to = std::countr_zero(nb);
        nb &= nb - 1;
        if (base[static_cast<size_t>(v)] == base[static_cast<size_t>(to)] ||
            match[static_cast<size_t>(v)] == to)
          continue;
        if (to == root ||
            (match[static_cast<size_t>(to)] != -1 &&
             parent[static_cast<size_t>(match[static_cast<size_t>(to)])] != -1)) {
          // Odd cycle: contract the blossom.
          int cur_base = lca(v, to);
          std::fill(in_blossom.begin(), in_blossom.end(), false);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n; ++i)
            if (in_blossom[static_cast<size_t>(base[static_cast<size_t>(i)])]) {
              base[static_cast<size_t>(i)] = cur_base;
              if (!used[static_cast<size_t>(i)]) {
                used[static_cast<size_t>(i)] = true;
                queue.push_back(i);
              }
            }
        } else if (parent[static_cast<size_t>(to)] == -1) {
          parent[static_cast<size_t>(to)] = v;
          if (match[static_cast<size_t>(to)] == -1) return to;
          used[static_cast<size_t>(match[static_cast<size_t>(to)])] = true;
          queue.push_back(match[static_cast<size_t>(to)]);
        }
      }
    }
    return -1;
  };

  for (int v = 0; v < n; ++v) {
    if (match[static_cast<size_t>(v)] != -1) continue;
    int u = find_augmenting(v);
    while (u != -1) {
      int pv = parent[static_cast<size_t>(u)];
      int ppv = match[static_cast<size_t>(pv)];
      match[static_cast<size_t>(u)] = pv;
      match[static_cast<size_t>(pv)] = u;
      u = ppv;
    }
  }

  MatchingResult out;
  for (int v = 0; v < n; ++v)
    if (match[static_cast<size_t>(v)] > v)
      out.edges.emplace_back(v, match[static_cast<size_t>(v)]);
  out.size = static_cast<int>(out.edges.size());
  return out;
}

int matching_number(const Graph& g) { return maximum_matching(g).size; }

namespace {

struct CoverSearch {
  const Graph& g;
  int best_size;
  std::uint64_t best_cover;

  int matching_lb(std::uint64_t active) const {
    int lb = 0;
    std::uint64_t avail = active;
    while (avail) {
      int u = std::countr_zero(avail);
      std::uint64_t nb = g.neighbors(u) & avail;
      avail &= ~(std::uint64_t{1} << u);
      if (nb) {
        int v = std::countr_zero(nb);
        avail &= ~(std::uint64_t{1} << v);
        ++lb;
      }
    }
    return lb;
  }

  void run(std::uint64_t active, std::uint64_t chosen, int count) {
    if (count + matching_lb(active) >= best_size) return;
    int pick = -1, pick_deg = 0;
    for (std::uint64_t m = active; m;) {
      int v = std::countr_zero(m);
      m &= m - 1;
      int d = std::popcount(g.neighbors(v) & active);
      if (d > pick_deg) {
        pick_deg = d;
        pick = v;
      }
    }
    if (pick < 0) {  // no edges left
      best_size = count;
      best_cover = chosen;
      return;
    }
    std::uint64_t pick_bit = std::uint64_t{1} << pick;
    std::uint64_t nbrs = g.neighbors(pick) & active;
    // Either pick is in the cover or all of its neighbours are.
    run(active & ~pick_bit, chosen | pick_bit, count + 1);
    run(active & ~nbrs & ~pick_bit, chosen | nbrs, count + std::popcount(nbrs));
  }
};

}  // namespace

CoverResult minimum_vertex_cover(const Graph& g) {
  if (g.order() > 32)
    throw ResourceError("exact vertex cover budget is order <= 32, got " +
                        std::to_string(g.order()));
  CoverSearch s{g, g.order() + 1, 0};
  s.run(g.vertex_mask(), 0, 0);
  return CoverResult{s.best_size, s.best_cover};
}

int covering_number(const Graph& g) { return minimum_vertex_cover(g).size; }

namespace {

struct TwoColoring {
  bool ok = false;
  // Per component: the two colour classes, smaller (or root's on ties) first.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> components;
};

TwoColoring two_color(const Graph& g) {
  TwoColoring out;
  std::vector<int> color(static_cast<size_t>(g.order()), -1);
  for (std::uint64_t mask : component_masks(g)) {
    int root = std::countr_zero(mask);
    color[static_cast<size_t>(root)] = 0;
    std::vector<int> queue{root};
    std::uint64_t side[2] = {std::uint64_t{1} << root, 0};
    for (size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      int c = color[static_cast<size_t>(v)];
      std::uint64_t nb = g.neighbors(v);
      while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        if (color[static_cast<size_t>(u)] == -1) {
          color[static_cast<size_t>(u)] = 1 - c;
          side[1 - c] |= std::uint64_t{1} << u;
          queue.push_back(u);
        } else if (color[static_cast<size_t>(u)] == c) {
          return out;  // odd cycle
        }
      }
    }
    if (std::popcount(side[1]) < std::popcount(side[0]))
      std::swap(side[0], side[1]);
    out.components.emplace_back(side[0], side[1]);
  }
  out.ok = true;
  return out;
}

}  // namespace

std::optional<Bipartition> bipartition(const Graph& g) {
  TwoColoring tc = two_color(g);
  if (!tc.ok) return std::nullopt;
  Bipartition out;
  for (auto [small, large] : tc.components) {
    if (small == 0) {  // isolated vertex
      out.side_b |= large;
    } else {
      out.side_a |= small;
      out.side_b |= large;
    }
  }
  return out;
}

std::optional<IndependentCovering> independent_covering_number(const Graph& g) {
  TwoColoring tc = two_color(g);
  if (!tc.ok) return std::nullopt;
  IndependentCovering out;
  for (auto [small, large] : tc.components) {
    if (small == 0) continue;  // isolated vertex
    out.vertices |= small;
    out.size += std::popcount(small);
  }
  return out;
}

std::vector<std::uint64_t> min_independent_coverings(const Graph& g) {
  TwoColoring tc = two_color(g);
  if (!tc.ok) return {};
  std::vector<std::uint64_t> out{0};
  for (auto [small, large] : tc.components) {
    if (small == 0) continue;  // isolated vertex, never in a minimum covering
    bool tie = std::popcount(small) == std::popcount(large);
    std::vector<std::uint64_t> next;
    next.reserve(out.size() * (tie ? 2 : 1));
    for (std::uint64_t base : out) {
      next.push_back(base | small);
      if (tie) next.push_back(base | large);
    }
    out = std::move(next);
  }
  return out;
}

bool is_factor_critical(const Graph& g) {
  int half = g.order() / 2;
  if (matching_number(g) != half) return false;
  for (int v = 0; v < g.order(); ++v) {
    Graph h = g.induced(g.vertex_mask() & ~(std::uint64_t{1} << v));
    if (matching_number(h) != half) return false;
  }
  return true;
}

}  // namespace blowup
