#include "commdetect/neighbor_matrix.hpp"

#include <string>

#include "commdetect/errors.hpp"

namespace commdetect {

NeighborMatrix::NeighborMatrix(const Graph& g, bool self_neighboring)
    : n_(g.node_count()), self_neighboring_(self_neighboring) {
  if (g.has_self_loops()) {
    throw ValidationError("neighbor matrices require a graph without self-loops");
  }
  shared_.assign(n_ * n_, 0);
  effective_degree_.resize(n_);
  const std::uint32_t self = self_neighboring ? 1 : 0;

  // Every common neighbour x of (a, b) is seen once while scanning x's row.
  for (NodeId x = 0; x < n_; ++x) {
    auto row = g.neighbors(x);
    for (std::size_t p = 0; p < row.size(); ++p) {
      for (std::size_t q = p + 1; q < row.size(); ++q) {
        ++shared_[index(row[p].node, row[q].node)];
        ++shared_[index(row[q].node, row[p].node)];
      }
    }
  }
  for (NodeId i = 0; i < n_; ++i) {
    effective_degree_[i] = static_cast<std::uint32_t>(g.degree(i)) + self;
    shared_[index(i, i)] = effective_degree_[i];
    if (!self_neighboring) continue;
    for (const auto& nb : g.neighbors(i)) shared_[index(i, nb.node)] += 2;
  }
}

std::size_t NeighborMatrix::index(NodeId i, NodeId j) const {
  if (i >= n_ || j >= n_) {
    throw ValidationError("node pair (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") out of range");
  }
  return static_cast<std::size_t>(i) * n_ + j;
}

NeighborMatrix neighbor_matrix(const Graph& g, bool self_neighboring) {
  return NeighborMatrix(g, self_neighboring);
}

}  // namespace commdetect
