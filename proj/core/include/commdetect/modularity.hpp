#pragma once

#include "commdetect/graph.hpp"
#include "commdetect/partition.hpp"

namespace commdetect {

// Newman-Girvan modularity of a weighted undirected graph,
//   Q = 1/(2m) * sum_ij [A_ij - k_i k_j / (2m)] delta(c_i, c_j),
// with A_ii = 2 * (self-loop weight). Throws ValidationError when the graph
// has no edges or the partition does not cover every node.
double modularity(const Graph& g, const Partition& p);

}  // namespace commdetect
