#pragma once

#include <optional>
#include <span>
#include <string>

#include "commdetect/dendrogram.hpp"
#include "commdetect/fastgreedy.hpp"
#include "commdetect/girvan_newman.hpp"
#include "commdetect/louvain.hpp"
#include "commdetect/partition.hpp"

namespace commdetect {

// {"labels": [...], "num_communities": k, "modularity": q}; modularity is
// null when it is undefined (graphs without edges).
std::string partition_to_json(const Partition& p, std::optional<double> modularity);
Partition partition_from_json(const std::string& text);

// [{"left", "right", "merged", "distance", "step"}, ...]
std::string dendrogram_to_json(const Dendrogram& d);

// [[u, v, score], ...] in removal order.
std::string cuts_to_json(std::span<const EdgeCut> cuts);

// [{"step", "i", "j", "dq", "q", "num_communities"}, ...]
std::string trace_to_json(std::span<const TraceStep> trace);

// {"variant", "runs", "q_values", "max", "min", "mean", "mean_runtime_ms"}
std::string stats_to_json(const RunStats& stats);

}  // namespace commdetect
