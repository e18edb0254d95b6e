#pragma once

#include <map>
#include <string>
#include <vector>

#include "blowup/canonical.hpp"
#include "blowup/graph.hpp"
#include "blowup/graph6.hpp"

namespace blowup {

// Finite set of graphs deduplicated up to isomorphism. Members are stored in
// canonical form and iterated in canonical-label order, so family contents
// are independent of insertion order and of the labelling of the inputs.
class GraphFamily {
 public:
  GraphFamily() = default;
  GraphFamily(std::initializer_list<Graph> graphs) {
    for (const Graph& g : graphs) insert(g);
  }

  // Returns true if the graph was new (up to isomorphism).
  bool insert(const Graph& g) {
    Graph canon = canonical_graph(g);
    std::string label = graph6_encode(canon);
    auto [it, fresh] = members_.emplace(std::move(label), std::move(canon));
    return fresh;
  }

  bool contains_isomorph(const Graph& g) const {
    return members_.count(canonical_form(g).value) > 0;
  }

  size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  std::vector<Graph> members() const {
    std::vector<Graph> out;
    out.reserve(members_.size());
    for (const auto& [label, g] : members_) out.push_back(g);
    return out;
  }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    out.reserve(members_.size());
    for (const auto& [label, g] : members_) out.push_back(label);
    return out;
  }

  // Canonical identity of the whole family (labels joined with '|').
  std::string key() const {
    std::string out;
    for (const auto& [label, g] : members_) {
      if (!out.empty()) out.push_back('|');
      out += label;
    }
    return out;
  }

  bool operator==(const GraphFamily& other) const {
    return labels() == other.labels();
  }

 private:
  std::map<std::string, Graph> members_;
};

}  // namespace blowup
