#include "commdetect/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "commdetect/errors.hpp"

namespace commdetect {

Graph Graph::from_edges(std::size_t node_count, std::vector<Edge> edges) {
  for (auto& e : edges) {
    if (e.u >= node_count || e.v >= node_count) {
      throw ValidationError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                            ") references a node outside 0.." + std::to_string(node_count));
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw ValidationError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                            ") has non-positive weight");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  for (std::size_t k = 1; k < edges.size(); ++k) {
    if (edges[k].u == edges[k - 1].u && edges[k].v == edges[k - 1].v) {
      throw ValidationError("duplicate edge (" + std::to_string(edges[k].u) + ", " +
                            std::to_string(edges[k].v) + ")");
    }
  }

  Graph g;
  g.offsets_.assign(node_count + 1, 0);
  g.self_loops_.assign(node_count, 0.0);
  g.weighted_degrees_.assign(node_count, 0.0);
  for (const auto& e : edges) {
    g.total_weight_ += e.weight;
    if (e.weight != 1.0) g.unweighted_ = false;
    if (e.u == e.v) {
      g.self_loops_[e.u] = e.weight;
      g.weighted_degrees_[e.u] += 2.0 * e.weight;
      ++g.self_loop_count_;
      continue;
    }
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
    g.weighted_degrees_[e.u] += e.weight;
    g.weighted_degrees_[e.v] += e.weight;
  }
  for (std::size_t i = 0; i < node_count; ++i) g.offsets_[i + 1] += g.offsets_[i];

  // Edges are sorted by (u, v), so filling in edge order keeps every
  // adjacency row sorted: row x first receives the smaller endpoints (x as
  // v, u ascending), then the larger ones (x as u, v ascending).
  g.adjacency_.resize(g.offsets_[node_count]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& e : edges) {
    if (e.u == e.v) continue;
    g.adjacency_[cursor[e.v]++] = {e.u, e.weight};
  }
  for (const auto& e : edges) {
    if (e.u == e.v) continue;
    g.adjacency_[cursor[e.u]++] = {e.v, e.weight};
  }
  g.edges_ = std::move(edges);
  return g;
}

void Graph::check_node(NodeId i) const {
  if (i >= node_count()) {
    throw ValidationError("node " + std::to_string(i) + " out of range (node_count " +
                          std::to_string(node_count()) + ")");
  }
}

std::span<const Neighbor> Graph::neighbors(NodeId i) const {
  check_node(i);
  return {adjacency_.data() + offsets_[i], adjacency_.data() + offsets_[i + 1]};
}

std::size_t Graph::degree(NodeId i) const {
  check_node(i);
  return offsets_[i + 1] - offsets_[i];
}

double Graph::self_loop(NodeId i) const {
  check_node(i);
  return self_loops_[i];
}

double Graph::weighted_degree(NodeId i) const {
  check_node(i);
  return weighted_degrees_[i];
}

bool Graph::adjacent(NodeId a, NodeId b) const {
  if (a == b) return self_loop(a) > 0.0;
  auto row = neighbors(a);
  check_node(b);
  auto it = std::lower_bound(row.begin(), row.end(), b,
                             [](const Neighbor& n, NodeId id) { return n.node < id; });
  return it != row.end() && it->node == b;
}

}  // namespace commdetect
