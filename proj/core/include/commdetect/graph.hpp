#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace commdetect {

using NodeId = std::uint32_t;

// Undirected edge, stored with u <= v. u == v is a self-loop.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  NodeId node = 0;
  double weight = 0.0;
};

// Immutable undirected weighted graph without parallel edges.
//
// Adjacency is kept in CSR form, sorted by neighbor id, and never lists
// self-loops; those are kept separately per node. A self-loop of weight w
// contributes 2w to the weighted degree so that the degrees sum to 2m.
class Graph {
 public:
  Graph() = default;

  // Validates and normalises the edge list: endpoints are swapped so that
  // u <= v and edges are sorted. Throws ValidationError on out-of-range
  // endpoints, non-positive or non-finite weights and duplicate edges.
  static Graph from_edges(std::size_t node_count, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  // Sorted by (u, v). The position of an edge in this list is its edge id.
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Neighbor> neighbors(NodeId i) const;
  std::size_t degree(NodeId i) const;
  double self_loop(NodeId i) const;
  double weighted_degree(NodeId i) const;

  // m: every edge counted once, self-loops included.
  double total_weight() const noexcept { return total_weight_; }

  bool has_self_loops() const noexcept { return self_loop_count_ > 0; }
  bool is_unweighted() const noexcept { return unweighted_; }
  bool adjacent(NodeId a, NodeId b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.node_count() == b.node_count() && a.edges_ == b.edges_;
  }

 private:
  void check_node(NodeId i) const;

  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
  std::vector<double> self_loops_;
  std::vector<double> weighted_degrees_;
  double total_weight_ = 0.0;
  std::size_t self_loop_count_ = 0;
  bool unweighted_ = true;
};

}  // namespace commdetect
