#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "commdetect/graph.hpp"

namespace commdetect {

// Edge-list text format: one "u v" or "u v w" per line, whitespace
// separated, '#' starts a comment line. Weight defaults to 1.0 and
// node_count is max id + 1. A "# nodes: N" comment raises node_count to N so
// that trailing isolated nodes survive a round trip.
Graph parse_edge_list(std::string_view text);
Graph load_edge_list(std::istream& in);
Graph load_edge_list(const std::filesystem::path& path);

// Writes the "# nodes: N" header followed by one line per edge. Unit weights
// are omitted; other weights are written in shortest round-trip form.
void write_edge_list(std::ostream& out, const Graph& g);

// Zachary's karate club: 34 members, 78 friendships, unit weights, members
// numbered from 0.
Graph karate_club();

// Erdos-Renyi G(n, p). Identical seeds give identical graphs on every
// platform. Throws ValidationError unless 0 <= p <= 1.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

}  // namespace commdetect
