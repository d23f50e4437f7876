#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "commdetect/graph.hpp"

namespace commdetect {

// Shared-neighbour counts n_ij for every node pair, plus the degree that the
// degree-based distances should use.
//
// With self-neighboring every node counts itself among its own neighbours:
// effective degrees grow by one and adjacent pairs gain two shared
// neighbours (each endpoint lies in both augmented neighbourhoods).
class NeighborMatrix {
 public:
  NeighborMatrix(const Graph& g, bool self_neighboring);

  std::size_t size() const noexcept { return n_; }
  bool self_neighboring() const noexcept { return self_neighboring_; }

  std::uint32_t shared(NodeId i, NodeId j) const { return shared_[index(i, j)]; }
  std::uint32_t effective_degree(NodeId i) const { return effective_degree_.at(i); }

 private:
  std::size_t index(NodeId i, NodeId j) const;

  std::size_t n_ = 0;
  bool self_neighboring_ = false;
  std::vector<std::uint32_t> shared_;
  std::vector<std::uint32_t> effective_degree_;
};

// Throws ValidationError when g has self-loops.
NeighborMatrix neighbor_matrix(const Graph& g, bool self_neighboring);

}  // namespace commdetect
