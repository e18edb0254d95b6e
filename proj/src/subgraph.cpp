#include "blowup/subgraph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace blowup {

bool Embedding::verify(const Graph& host, const Graph& pattern) const {
  if (map.size() != static_cast<size_t>(pattern.order())) return false;
  std::uint64_t used = 0;
  for (int img : map) {
    if (img < 0 || img >= host.order()) return false;
    std::uint64_t bit = std::uint64_t{1} << img;
    if (used & bit) return false;
    used |= bit;
  }
  for (auto [u, v] : pattern.edges())
    if (!host.has_edge(map[static_cast<size_t>(u)],
                       map[static_cast<size_t>(v)]))
      return false;
  return true;
}

namespace {

class Matcher {
 public:
  Matcher(const Graph& host, const Graph& pattern)
      : host_(host),
        pattern_(pattern),
        map_(static_cast<size_t>(pattern.order()), -1),
        domains_(static_cast<size_t>(pattern.order())) {
    for (int pv = 0; pv < pattern_.order(); ++pv) {
      std::uint64_t d = 0;
      for (int hv = 0; hv < host_.order(); ++hv)
        if (host_.degree(hv) >= pattern_.degree(pv))
          d |= std::uint64_t{1} << hv;
      domains_[static_cast<size_t>(pv)] = d;
    }
  }

  // Pattern vertices not yet assigned, in descending-degree order.
  void build_order() {
    order_.clear();
    for (int pv = 0; pv < pattern_.order(); ++pv)
      if (map_[static_cast<size_t>(pv)] < 0) order_.push_back(pv);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return pattern_.degree(a) > pattern_.degree(b);
    });
  }

  bool assign(int pv, int hv) {
    std::uint64_t bit = std::uint64_t{1} << hv;
    if ((domains_[static_cast<size_t>(pv)] & bit) == 0 || (used_ & bit))
      return false;
    map_[static_cast<size_t>(pv)] = hv;
    used_ |= bit;
    // Check already-mapped pattern neighbours; narrow the unmapped ones.
    std::uint64_t pnb = pattern_.neighbors(pv);
    while (pnb) {
      int pu = std::countr_zero(pnb);
      pnb &= pnb - 1;
      int img = map_[static_cast<size_t>(pu)];
      if (img >= 0) {
        if (!host_.has_edge(hv, img)) return false;
      } else {
        domains_[static_cast<size_t>(pu)] &= host_.neighbors(hv);
        if (domains_[static_cast<size_t>(pu)] == 0) return false;
      }
    }
    return true;
  }

  bool extend(size_t k) {
    if (k == order_.size()) return true;
    int pv = order_[k];
    std::uint64_t cand = domains_[static_cast<size_t>(pv)] & ~used_;
    while (cand) {
      int hv = std::countr_zero(cand);
      cand &= cand - 1;
      auto saved_domains = domains_;
      std::uint64_t saved_used = used_;
      if (assign(pv, hv) && extend(k + 1)) return true;
      map_[static_cast<size_t>(pv)] = -1;
      domains_ = std::move(saved_domains);
      used_ = saved_used;
    }
    return false;
  }

  std::optional<Embedding> solve() {
    build_order();
    if (!extend(0)) return std::nullopt;
    return Embedding{map_};
  }

  // Resets its own state on failure, so one matcher serves many anchors.
  std::optional<Embedding> solve_anchored(int pa, int pb, int hu, int hv) {
    auto saved = domains_;
    if (assign(pa, hu) && assign(pb, hv)) {
      build_order();
      if (extend(0)) return Embedding{map_};
    }
    map_.assign(static_cast<size_t>(pattern_.order()), -1);
    domains_ = std::move(saved);
    used_ = 0;
    return std::nullopt;
  }

 private:
  const Graph& host_;
  const Graph& pattern_;
  std::vector<int> map_;
  std::vector<std::uint64_t> domains_;
  std::vector<int> order_;
  std::uint64_t used_ = 0;
};

}  // namespace

std::optional<Embedding> contains_subgraph(const Graph& host,
                                           const Graph& pattern) {
  if (pattern.order() > host.order() || pattern.size() > host.size())
    return std::nullopt;
  return Matcher(host, pattern).solve();
}

std::optional<Embedding> contains_subgraph_using_edge(const Graph& host,
                                                      const Graph& pattern,
                                                      int hu, int hv) {
  if (pattern.order() > host.order() || pattern.size() > host.size())
    return std::nullopt;
  if (!host.has_edge(hu, hv)) return std::nullopt;
  Matcher matcher(host, pattern);
  for (auto [pa, pb] : pattern.edges()) {
    if (auto e = matcher.solve_anchored(pa, pb, hu, hv)) return e;
    if (auto e = matcher.solve_anchored(pa, pb, hv, hu)) return e;
  }
  return std::nullopt;
}

}  // namespace blowup
