#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "commdetect/graph.hpp"
#include "commdetect/partition.hpp"

namespace commdetect {

// Breadth-first shortest-path tree. level is -1 for nodes the root cannot
// reach; paths counts the shortest root paths ending at each node.
struct BfsTree {
  NodeId root = 0;
  std::vector<std::int64_t> level;
  std::vector<double> paths;
  std::vector<std::vector<NodeId>> parents;

  bool reached(NodeId v) const { return level[v] >= 0; }
};

BfsTree bfs_tree(const Graph& g, NodeId root);

// Betweenness per edge, aligned with g.edges(). Each unordered node pair
// distributes one unit of credit across its shortest paths.
struct EdgeScores {
  std::vector<Edge> edges;
  std::vector<double> scores;

  double score(NodeId u, NodeId v) const;
};

EdgeScores edge_betweenness(const Graph& g);

struct EdgeCut {
  NodeId u = 0;
  NodeId v = 0;
  double score = 0.0;
};

struct DivisiveResult {
  Partition partition;
  std::vector<EdgeCut> cuts;
};

// Removes the highest-betweenness edge and rescores the affected components
// until there are at least `target_communities` components or no edges
// remain. Ties go to the smallest (u, v).
DivisiveResult girvan_newman(const Graph& g, std::size_t target_communities);

// Scores once, then cuts edges in decreasing order of their initial score.
DivisiveResult girvan_newman_static(const Graph& g, std::size_t target_communities);

}  // namespace commdetect
