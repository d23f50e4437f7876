#include "commdetect/serialize.hpp"

#include <nlohmann/json.hpp>

#include <limits>

#include "commdetect/errors.hpp"

namespace commdetect {

using nlohmann::json;

std::string partition_to_json(const Partition& p, std::optional<double> modularity) {
  json out;
  out["labels"] = p.labels();
  out["num_communities"] = p.num_communities();
  out["modularity"] = modularity ? json(*modularity) : json(nullptr);
  return out.dump();
}

Partition partition_from_json(const std::string& text) {
  try {
    const json in = json::parse(text);
    const json& labels = in.at("labels");
    if (!labels.is_array()) throw ParseError(0, "partition labels must be an array");
    std::vector<Label> out;
    out.reserve(labels.size());
    for (const json& l : labels) {
      if (!l.is_number_unsigned() || l.get<std::uint64_t>() > std::numeric_limits<Label>::max()) {
        throw ParseError(0, "partition labels must be non-negative integers");
      }
      out.push_back(l.get<Label>());
    }
    return Partition(std::move(out));
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("invalid partition JSON: ") + e.what());
  }
}

std::string dendrogram_to_json(const Dendrogram& d) {
  json out = json::array();
  for (const auto& m : d.merges()) {
    out.push_back({{"left", m.left}, {"right", m.right}, {"merged", m.merged},
                   {"distance", m.distance}, {"step", m.step}});
  }
  return out.dump();
}

std::string cuts_to_json(std::span<const EdgeCut> cuts) {
  json out = json::array();
  for (const auto& c : cuts) out.push_back(json::array({c.u, c.v, c.score}));
  return out.dump();
}

std::string trace_to_json(std::span<const TraceStep> trace) {
  json out = json::array();
  for (const auto& t : trace) {
    out.push_back({{"step", t.step}, {"i", t.i}, {"j", t.j}, {"dq", t.dq}, {"q", t.q},
                   {"num_communities", t.num_communities}});
  }
  return out.dump();
}

std::string stats_to_json(const RunStats& stats) {
  json out;
  out["variant"] = std::string(to_string(stats.variant));
  out["runs"] = stats.runs();
  out["q_values"] = stats.q_values;
  out["max"] = stats.max;
  out["min"] = stats.min;
  out["mean"] = stats.mean;
  out["mean_runtime_ms"] = stats.mean_runtime_ms;
  return out.dump();
}

}  // namespace commdetect
