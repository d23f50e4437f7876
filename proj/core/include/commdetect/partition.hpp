#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "commdetect/graph.hpp"

namespace commdetect {

using Label = std::uint32_t;

// Total assignment of nodes to community labels. Labels are arbitrary
// non-negative integers; canonical() renumbers them in first-appearance
// order so that two partitions can be compared for equality.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<Label> labels) : labels_(std::move(labels)) {}

  static Partition singletons(std::size_t node_count);
  static Partition single_community(std::size_t node_count);

  std::size_t size() const noexcept { return labels_.size(); }
  Label operator[](NodeId i) const { return labels_[i]; }
  const std::vector<Label>& labels() const noexcept { return labels_; }

  std::size_t num_communities() const;
  Partition canonical() const;

  // Node lists per canonical community, in first-appearance order.
  std::vector<std::vector<NodeId>> communities() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Label> labels_;
};

// True when both partitions group the nodes identically.
bool same_grouping(const Partition& a, const Partition& b);

// Nodes share a label iff a path connects them. Labels are assigned in order
// of the smallest node id of each component.
Partition connected_components(const Graph& g);

}  // namespace commdetect
