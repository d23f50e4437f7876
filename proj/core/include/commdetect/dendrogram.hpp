#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "commdetect/partition.hpp"

namespace commdetect {

using ClusterId = std::uint32_t;

// One join. Leaves are clusters 0..n-1; the k-th merge creates cluster n+k.
struct Merge {
  ClusterId left = 0;
  ClusterId right = 0;
  ClusterId merged = 0;
  double distance = 0.0;
  std::size_t step = 0;

  friend bool operator==(const Merge&, const Merge&) = default;
};

class Dendrogram {
 public:
  explicit Dendrogram(std::size_t leaf_count) : leaf_count_(leaf_count) {}

  std::size_t leaf_count() const noexcept { return leaf_count_; }
  const std::vector<Merge>& merges() const noexcept { return merges_; }

  // Appends a merge of two live clusters and returns the new cluster id.
  ClusterId merge(ClusterId left, ClusterId right, double distance);

  // Partition after applying the first `count` merges.
  Partition partition_after(std::size_t count) const;

  friend bool operator==(const Dendrogram&, const Dendrogram&) = default;

 private:
  std::size_t leaf_count_;
  std::vector<Merge> merges_;
  std::vector<bool> consumed_;
};

// Horizontal separation line. Absolute values count merges undone from the
// top; relative values run from 0 (top, one cluster) to 1 (bottom, all
// singletons).
struct HslSpec {
  enum class Mode { absolute, relative };
  Mode mode = Mode::relative;
  double value = 0.0;
};

// Cuts the dendrogram at the given line. Relative values map to
// round-half-up(value * (n - 1)) undone merges. Throws ValidationError on a
// malformed HslSpec or when more merges would be undone than exist.
Partition cut(const Dendrogram& d, const HslSpec& spec);

}  // namespace commdetect
