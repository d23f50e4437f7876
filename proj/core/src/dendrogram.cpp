#include "commdetect/dendrogram.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "commdetect/errors.hpp"

namespace commdetect {
namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  std::vector<std::uint32_t> parent;
};

}  // namespace

ClusterId Dendrogram::merge(ClusterId left, ClusterId right, double distance) {
  const std::size_t next = leaf_count_ + merges_.size();
  if (merges_.size() + 1 >= std::max<std::size_t>(leaf_count_, 1)) {
    throw ValidationError("dendrogram over " + std::to_string(leaf_count_) +
                          " leaves is already complete");
  }
  consumed_.resize(next + 1, false);
  if (left == right || left >= next || right >= next || consumed_[left] || consumed_[right]) {
    throw ValidationError("merge of cluster " + std::to_string(left) + " and " +
                          std::to_string(right) + " does not join two live clusters");
  }
  consumed_[left] = true;
  consumed_[right] = true;
  const auto merged = static_cast<ClusterId>(next);
  merges_.push_back({left, right, merged, distance, merges_.size()});
  return merged;
}

Partition Dendrogram::partition_after(std::size_t count) const {
  if (count > merges_.size()) {
    throw ValidationError("dendrogram has only " + std::to_string(merges_.size()) + " merges");
  }
  // Cluster ids index the union-find directly: leaves, then merge results.
  DisjointSets sets(leaf_count_ + merges_.size());
  for (std::size_t k = 0; k < count; ++k) {
    const auto& mg = merges_[k];
    sets.parent[sets.find(mg.left)] = mg.merged;
    sets.parent[sets.find(mg.right)] = mg.merged;
  }
  std::vector<Label> labels(leaf_count_);
  for (NodeId i = 0; i < leaf_count_; ++i) labels[i] = sets.find(i);
  return Partition(std::move(labels)).canonical();
}

Partition cut(const Dendrogram& d, const HslSpec& spec) {
  const std::size_t total = d.merges().size();
  double undo = 0.0;
  if (spec.mode == HslSpec::Mode::absolute) {
    if (!(spec.value >= 0.0) || spec.value != std::floor(spec.value)) {
      throw ValidationError("absolute HSL level must be a non-negative integer");
    }
    undo = spec.value;
  } else {
    if (!(spec.value >= 0.0 && spec.value <= 1.0)) {
      throw ValidationError("relative HSL level must lie in [0, 1]");
    }
    // Relative levels count against the n - 1 merges of a full dendrogram.
    const double full = d.leaf_count() > 0 ? static_cast<double>(d.leaf_count() - 1) : 0.0;
    undo = std::floor(spec.value * full + 0.5);
  }
  if (undo > static_cast<double>(total)) {
    throw ValidationError("cannot undo " + std::to_string(static_cast<std::size_t>(undo)) +
                          " merges of a dendrogram with " + std::to_string(total));
  }
  return d.partition_after(total - static_cast<std::size_t>(undo));
}

}  // namespace commdetect
