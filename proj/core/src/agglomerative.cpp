#include "commdetect/agglomerative.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <tuple>

#include "commdetect/errors.hpp"

namespace commdetect {

std::string_view to_string(LinkageKind kind) {
  switch (kind) {
    case LinkageKind::single: return "single";
    case LinkageKind::complete: return "complete";
    case LinkageKind::average: return "average";
  }
  return "unknown";
}

LinkageKind parse_linkage(std::string_view name) {
  if (name == "single" || name == "min") return LinkageKind::single;
  if (name == "complete" || name == "max") return LinkageKind::complete;
  if (name == "average" || name == "mean") return LinkageKind::average;
  throw ValidationError("unknown linkage '" + std::string(name) + "'");
}

double euclidean_distance(const NeighborMatrix& nm, NodeId i, NodeId j) {
  if (i == j) throw ValidationError("distance of a node to itself is not defined");
  return static_cast<double>(nm.effective_degree(i)) + static_cast<double>(nm.effective_degree(j)) -
         2.0 * static_cast<double>(nm.shared(i, j));
}

double linkage_distance(LinkageKind kind, std::span<const NodeId> a, std::span<const NodeId> b,
                        const PairDistance& distance) {
  if (a.empty() || b.empty()) throw ValidationError("linkage of an empty cluster");
  double best_min = std::numeric_limits<double>::infinity();
  double best_max = -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (NodeId x : a) {
    for (NodeId y : b) {
      const double d = distance(x, y);
      best_min = std::min(best_min, d);
      best_max = std::max(best_max, d);
      sum += d;
    }
  }
  switch (kind) {
    case LinkageKind::single: return best_min;
    case LinkageKind::complete: return best_max;
    case LinkageKind::average: return sum / static_cast<double>(a.size() * b.size());
  }
  return sum;
}

Dendrogram agglomerate(const Graph& g, LinkageKind kind, bool self_neighboring) {
  const std::size_t n = g.node_count();
  const NeighborMatrix nm(g, self_neighboring);

  // Node distances never change, so they are computed once.
  std::vector<double> node_distance(n * n, 0.0);
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = 0; j < n; ++j) {
      if (i != j) node_distance[i * n + j] = euclidean_distance(nm, i, j);
    }
  }
  const PairDistance lookup = [&](NodeId x, NodeId y) { return node_distance[x * n + y]; };

  // One slot per original node; a merge keeps the lower slot alive.
  std::vector<std::vector<NodeId>> members(n);
  std::vector<ClusterId> cluster_of_slot(n);
  std::vector<std::size_t> live;
  for (NodeId i = 0; i < n; ++i) {
    members[i] = {i};
    cluster_of_slot[i] = i;
    live.push_back(i);
  }
  std::vector<double> linkage(n * n, 0.0);
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = 0; j < n; ++j) linkage[i * n + j] = node_distance[i * n + j];
  }

  Dendrogram dendrogram(n);
  while (live.size() > 1) {
    // Key: (distance, lower cluster id, higher cluster id).
    std::tuple<double, ClusterId, ClusterId> best{std::numeric_limits<double>::infinity(), 0, 0};
    std::size_t best_a = 0;
    std::size_t best_b = 0;
    for (std::size_t p = 0; p < live.size(); ++p) {
      for (std::size_t q = p + 1; q < live.size(); ++q) {
        const std::size_t a = live[p];
        const std::size_t b = live[q];
        const ClusterId ca = cluster_of_slot[a];
        const ClusterId cb = cluster_of_slot[b];
        std::tuple<double, ClusterId, ClusterId> key{linkage[a * n + b], std::min(ca, cb),
                                                     std::max(ca, cb)};
        if (key < best) {
          best = key;
          best_a = a;
          best_b = b;
        }
      }
    }

    const auto [distance, low, high] = best;
    const ClusterId merged = dendrogram.merge(low, high, distance);
    const std::size_t keep = std::min(best_a, best_b);
    const std::size_t drop = std::max(best_a, best_b);
    members[keep].insert(members[keep].end(), members[drop].begin(), members[drop].end());
    members[drop].clear();
    cluster_of_slot[keep] = merged;
    live.erase(std::find(live.begin(), live.end(), drop));

    for (std::size_t other : live) {
      if (other == keep) continue;
      const double d = linkage_distance(kind, members[keep], members[other], lookup);
      linkage[keep * n + other] = d;
      linkage[other * n + keep] = d;
    }
  }
  return dendrogram;
}

}  // namespace commdetect
