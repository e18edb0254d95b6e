#include "blowup/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <unordered_map>

#include "blowup/canonical.hpp"
#include "blowup/graph6.hpp"
#include "blowup/invariants.hpp"

namespace blowup {

namespace {

int pick_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("BLOWUP_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 8u));
}

struct LevelEntry {
  std::string label;
  Graph graph;
};

// Expand one level: for every admitted parent try every non-edge, keep the
// admitted children deduplicated by canonical label. The result is a set, so
// it does not depend on the work split across threads.
std::vector<LevelEntry> expand_level(const std::vector<LevelEntry>& level,
                                     const EdgePredicate& admits,
                                     int threads) {
  std::atomic<size_t> next_parent{0};
  std::vector<std::vector<LevelEntry>> found(static_cast<size_t>(threads));

  auto work = [&](int tid) {
    for (;;) {
      size_t i = next_parent.fetch_add(1);
      if (i >= level.size()) break;
      const Graph& parent = level[i].graph;
      for (int u = 0; u < parent.order(); ++u) {
        for (int v = u + 1; v < parent.order(); ++v) {
          if (parent.has_edge(u, v)) continue;
          Graph child = parent;
          child.add_edge(u, v);
          if (!admits(child, u, v)) continue;
          Graph canon = canonical_graph(child);
          found[static_cast<size_t>(tid)].push_back(
              {graph6_encode(canon), std::move(canon)});
        }
      }
    }
  };

  if (threads <= 1 || level.size() < 2) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& t : pool) t.join();
  }

  std::unordered_map<std::string, Graph> dedup;
  for (auto& bucket : found)
    for (auto& entry : bucket) dedup.emplace(std::move(entry.label),
                                             std::move(entry.graph));
  std::vector<LevelEntry> out;
  out.reserve(dedup.size());
  for (auto& [label, graph] : dedup) out.push_back({label, std::move(graph)});
  std::sort(out.begin(), out.end(),
            [](const LevelEntry& a, const LevelEntry& b) {
              return a.label < b.label;
            });
  return out;
}

}  // namespace

GenerationResult generate_admitted(int n, const EdgePredicate& admits,
                                   const GenerationOptions& options) {
  if (n < 0 || n > Graph::kMaxOrder)
    throw ParameterError("generation order out of range");
  int threads = pick_threads(options.threads);

  GenerationResult result;
  std::vector<LevelEntry> level{{graph6_encode(Graph(n)), Graph(n)}};
  result.total_graphs = 1;
  if (options.visit) options.visit(level[0].graph);

  for (int m = 1; m <= n * (n - 1) / 2; ++m) {
    std::vector<LevelEntry> next = expand_level(level, admits, threads);
    if (next.empty()) break;
    result.total_graphs += next.size();
    if (options.visit)
      for (const auto& entry : next) options.visit(entry.graph);
    level = std::move(next);
    result.max_edges = m;
  }
  result.extremal.reserve(level.size());
  for (auto& entry : level) result.extremal.push_back(std::move(entry.graph));
  return result;
}

std::uint64_t count_all_graphs(int n) {
  auto admit_all = [](const Graph&, int, int) { return true; };
  return generate_admitted(n, admit_all).total_graphs;
}

std::vector<Graph> all_graphs(int n) {
  std::vector<Graph> out;
  GenerationOptions options;
  options.visit = [&](const Graph& g) { out.push_back(g); };
  auto admit_all = [](const Graph&, int, int) { return true; };
  generate_admitted(n, admit_all, options);
  return out;
}

ConstrainedMax max_edges_nu_delta(int nu, int delta) {
  if (nu < 0 || delta < 0) throw ParameterError("nu and delta must be >= 0");
  if (nu == 0 || delta == 0) return {0, Graph(0)};
  long long capacity = static_cast<long long>(nu) * (delta + 1);
  if (capacity > Graph::kMaxOrder)
    throw ResourceError("nu*(delta+1) exceeds the order cap of 64");
  int n = static_cast<int>(capacity);
  auto admits = [&](const Graph& g, int u, int v) {
    if (g.degree(u) > delta || g.degree(v) > delta) return false;
    return matching_number(g) <= nu;
  };
  GenerationResult r = generate_admitted(n, admits);
  return {r.max_edges, r.extremal.empty() ? Graph(n) : r.extremal.front()};
}

}  // namespace blowup
