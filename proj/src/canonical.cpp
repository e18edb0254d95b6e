#include "blowup/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "blowup/graph6.hpp"

namespace blowup {
namespace {

// Canonical labelling of one connected (or small arbitrary) graph by
// individualization-refinement: refine an ordered partition to equitability,
// branch on the first non-singleton cell, and keep the labelling whose
// adjacency rows are lexicographically largest. Vertices with identical
// neighbourhoods (twins) are interchangeable, so only one per twin class is
// branched on.
class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  std::vector<int> run() {
    if (n_ == 0) return {};
    std::vector<std::vector<int>> cells{std::vector<int>(static_cast<size_t>(n_))};
    for (int v = 0; v < n_; ++v) cells[0][static_cast<size_t>(v)] = v;
    refine(cells);
    search(cells);
    return best_perm_;
  }

 private:
  using Cells = std::vector<std::vector<int>>;

  // Signature of v against the current cells: neighbour count into every
  // cell. Counts fit in 6 bits, so up to 10 cells pack into one word; the
  // slow path handles finer partitions exactly.
  void refine(Cells& cells) {
    for (;;) {
      std::vector<std::uint64_t> cell_mask(cells.size(), 0);
      for (size_t c = 0; c < cells.size(); ++c)
        for (int v : cells[c]) cell_mask[c] |= std::uint64_t{1} << v;

      Cells next;
      next.reserve(cells.size());
      bool split = false;
      bool packed = cells.size() <= 10;
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        if (packed) {
          std::vector<std::pair<std::uint64_t, int>> keyed;
          keyed.reserve(cell.size());
          for (int v : cell) {
            std::uint64_t sig = 0;
            for (size_t c = 0; c < cells.size(); ++c)
              sig = sig << 6 |
                    static_cast<unsigned>(
                        std::popcount(g_.neighbors(v) & cell_mask[c]));
            keyed.emplace_back(~sig, v);  // bigger signature first
          }
          std::sort(keyed.begin(), keyed.end());
          size_t i = 0;
          while (i < keyed.size()) {
            size_t j = i;
            std::vector<int> sub;
            while (j < keyed.size() && keyed[j].first == keyed[i].first)
              sub.push_back(keyed[j++].second);
            if (sub.size() != cell.size()) split = true;
            next.push_back(std::move(sub));
            i = j;
          }
        } else {
          std::vector<std::pair<std::vector<int>, int>> keyed;
          keyed.reserve(cell.size());
          for (int v : cell) {
            std::vector<int> sig(cells.size());
            for (size_t c = 0; c < cells.size(); ++c)
              sig[c] = std::popcount(g_.neighbors(v) & cell_mask[c]);
            keyed.emplace_back(std::move(sig), v);
          }
          std::sort(keyed.begin(), keyed.end(),
                    [](const auto& a, const auto& b) {
                      if (a.first != b.first) return a.first > b.first;
                      return a.second < b.second;
                    });
          size_t i = 0;
          while (i < keyed.size()) {
            size_t j = i;
            std::vector<int> sub;
            while (j < keyed.size() && keyed[j].first == keyed[i].first)
              sub.push_back(keyed[j++].second);
            if (sub.size() != cell.size()) split = true;
            next.push_back(std::move(sub));
            i = j;
          }
        }
      }
      cells.swap(next);
      if (!split) return;
    }
  }

  void search(const Cells& cells) {
    size_t target = cells.size();
    for (size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1) {
        target = c;
        break;
      }
    if (target == cells.size()) {
      evaluate_leaf(cells);
      return;
    }
    const std::vector<int>& cell = cells[target];
    std::vector<int> reps;
    for (int v : cell) {
      bool dup = false;
      for (int r : reps)
        if (twins(r, v)) {
          dup = true;
          break;
        }
      if (dup) continue;
      reps.push_back(v);
      Cells next;
      next.reserve(cells.size() + 1);
      for (size_t c = 0; c < target; ++c) next.push_back(cells[c]);
      next.push_back({v});
      std::vector<int> rest;
      for (int u : cell)
        if (u != v) rest.push_back(u);
      next.push_back(std::move(rest));
      for (size_t c = target + 1; c < cells.size(); ++c) next.push_back(cells[c]);
      refine(next);
      search(next);
    }
  }

  bool twins(int u, int v) const {
    std::uint64_t strip = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
    return (g_.neighbors(u) & strip) == (g_.neighbors(v) & strip);
  }

  void evaluate_leaf(const Cells& cells) {
    std::vector<int> perm(static_cast<size_t>(n_));
    int pos = 0;
    for (const auto& cell : cells) perm[static_cast<size_t>(cell[0])] = pos++;
    std::vector<std::uint64_t> rows(static_cast<size_t>(n_), 0);
    for (int v = 0; v < n_; ++v) {
      std::uint64_t nb = g_.neighbors(v);
      std::uint64_t img = 0;
      while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        img |= std::uint64_t{1} << perm[static_cast<size_t>(u)];
      }
      rows[static_cast<size_t>(perm[static_cast<size_t>(v)])] = img;
    }
    if (best_perm_.empty() || rows > best_rows_) {
      best_rows_ = std::move(rows);
      best_perm_ = std::move(perm);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<std::uint64_t> best_rows_;
  std::vector<int> best_perm_;
};

}  // namespace

Graph canonical_graph(const Graph& g) {
  // Canonicalize per component, then order components by their labels so
  // that the assembled graph is independent of the input labelling.
  struct Piece {
    std::string label;
    Graph graph;
  };
  std::vector<Piece> pieces;
  for (std::uint64_t mask : component_masks(g)) {
    Graph comp = g.induced(mask);
    std::vector<int> perm = Canonizer(comp).run();
    Graph canon = comp.relabeled(perm);
    pieces.push_back({graph6_encode(canon), std::move(canon)});
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& a, const Piece& b) { return a.label > b.label; });
  Graph out(g.order());
  int offset = 0;
  for (const Piece& p : pieces) {
    for (auto [u, v] : p.graph.edges()) out.add_edge(offset + u, offset + v);
    offset += p.graph.order();
  }
  return out;
}

CanonicalLabel canonical_form(const Graph& g) {
  return CanonicalLabel{graph6_encode(canonical_graph(g))};
}

}  // namespace blowup
