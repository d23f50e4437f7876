#pragma once

#include <vector>

#include "commdetect/commdetect.hpp"

namespace fixtures {

using commdetect::Edge;
using commdetect::Graph;
using commdetect::NodeId;

inline Graph make(std::size_t n, std::vector<Edge> edges) { return Graph::from_edges(n, std::move(edges)); }

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId i = 1; i < n; ++i) e.push_back({i - 1, i, 1.0});
  return make(n, e);
}

inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (NodeId i = 1; i <= leaves; ++i) e.push_back({0, i, 1.0});
  return make(leaves + 1, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId i = 0; i < n; ++i) e.push_back({i, static_cast<NodeId>((i + 1) % n), 1.0});
  return make(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) e.push_back({i, j, 1.0});
  }
  return make(n, e);
}

// Two k-cliques joined by a single edge between node k-1 and node k.
inline Graph bridged_cliques(std::size_t k) {
  std::vector<Edge> e;
  for (NodeId base : {NodeId{0}, static_cast<NodeId>(k)}) {
    for (NodeId i = 0; i < k; ++i) {
      for (NodeId j = i + 1; j < k; ++j) e.push_back({base + i, base + j, 1.0});
    }
  }
  e.push_back({static_cast<NodeId>(k - 1), static_cast<NodeId>(k), 1.0});
  return make(2 * k, e);
}

inline Graph two_triangles() { return make(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}); }

// Structured graphs plus random ones with n <= 12.
inline std::vector<Graph> small_suite(std::size_t random_count = 100) {
  std::vector<Graph> out;
  for (std::size_t n = 2; n <= 8; ++n) {
    out.push_back(path(n));
    out.push_back(star(n));
    if (n >= 3) out.push_back(cycle(n));
  }
  for (std::size_t k = 3; k <= 6; ++k) out.push_back(bridged_cliques(k));
  out.push_back(two_triangles());
  for (std::size_t s = 0; s < random_count; ++s) {
    const std::size_t n = 3 + s % 10;
    const double p = s % 2 == 0 ? 0.2 : 0.5;
    out.push_back(commdetect::random_graph(n, p, 1000 + s));
  }
  return out;
}

}  // namespace fixtures
