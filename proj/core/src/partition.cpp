#include "commdetect/partition.hpp"

#include <numeric>
#include <queue>
#include <unordered_map>

namespace commdetect {

Partition Partition::singletons(std::size_t node_count) {
  std::vector<Label> labels(node_count);
  std::iota(labels.begin(), labels.end(), Label{0});
  return Partition(std::move(labels));
}

Partition Partition::single_community(std::size_t node_count) {
  return Partition(std::vector<Label>(node_count, 0));
}

std::size_t Partition::num_communities() const {
  return canonical().communities().size();
}

Partition Partition::canonical() const {
  std::unordered_map<Label, Label> renumber;
  std::vector<Label> out;
  out.reserve(labels_.size());
  for (Label l : labels_) {
    auto [it, inserted] = renumber.try_emplace(l, static_cast<Label>(renumber.size()));
    out.push_back(it->second);
  }
  return Partition(std::move(out));
}

std::vector<std::vector<NodeId>> Partition::communities() const {
  std::unordered_map<Label, std::size_t> slot;
  std::vector<std::vector<NodeId>> groups;
  for (NodeId i = 0; i < labels_.size(); ++i) {
    auto [it, inserted] = slot.try_emplace(labels_[i], groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(i);
  }
  return groups;
}

bool same_grouping(const Partition& a, const Partition& b) {
  return a.canonical() == b.canonical();
}

Partition connected_components(const Graph& g) {
  constexpr Label kUnset = static_cast<Label>(-1);
  const std::size_t n = g.node_count();
  std::vector<Label> labels(n, kUnset);
  Label next = 0;
  std::queue<NodeId> frontier;
  for (NodeId s = 0; s < n; ++s) {
    if (labels[s] != kUnset) continue;
    labels[s] = next;
    frontier.push(s);
    while (!frontier.empty()) {
      NodeId x = frontier.front();
      frontier.pop();
      for (const auto& nb : g.neighbors(x)) {
        if (labels[nb.node] == kUnset) {
          labels[nb.node] = next;
          frontier.push(nb.node);
        }
      }
    }
    ++next;
  }
  return Partition(std::move(labels));
}

}  // namespace commdetect
