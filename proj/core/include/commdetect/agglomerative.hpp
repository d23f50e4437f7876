#pragma once

#include <functional>
#include <span>
#include <string_view>

#include "commdetect/dendrogram.hpp"
#include "commdetect/graph.hpp"
#include "commdetect/neighbor_matrix.hpp"

namespace commdetect {

enum class LinkageKind { single, complete, average };

std::string_view to_string(LinkageKind kind);
LinkageKind parse_linkage(std::string_view name);

// d_ij = k_i + k_j - 2 n_ij over effective degrees and shared-neighbour
// counts. Throws ValidationError when i == j.
double euclidean_distance(const NeighborMatrix& nm, NodeId i, NodeId j);

using PairDistance = std::function<double(NodeId, NodeId)>;

// min / max / mean of pairwise distances across the two clusters.
double linkage_distance(LinkageKind kind, std::span<const NodeId> a, std::span<const NodeId> b,
                        const PairDistance& distance);

// Bottom-up clustering with the network Euclidean distance. Always produces
// n - 1 merges. At every step the closest pair of live clusters is joined;
// ties go to the lexicographically smallest (lower id, higher id) pair.
Dendrogram agglomerate(const Graph& g, LinkageKind kind, bool self_neighboring);

}  // namespace commdetect
