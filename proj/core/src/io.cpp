#include "commdetect/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>

#include "commdetect/errors.hpp"

namespace commdetect {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Splits off the next whitespace-delimited token.
std::string_view next_token(std::string_view& rest) {
  rest = trim(rest);
  std::size_t end = 0;
  while (end < rest.size() && !is_space(rest[end])) ++end;
  auto token = rest.substr(0, end);
  rest.remove_prefix(end);
  return token;
}

NodeId parse_node(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected a non-negative node id, got '" + std::string(token) + "'");
  }
  if (value >= std::numeric_limits<NodeId>::max()) {
    throw ParseError(line, "node id " + std::string(token) + " is too large");
  }
  return static_cast<NodeId>(value);
}

double parse_weight(std::string_view token, std::size_t line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected a numeric weight, got '" + std::string(token) + "'");
  }
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ValidationError("line " + std::to_string(line) + ": weight must be positive, got " +
                          std::string(token));
  }
  return value;
}

// "# nodes: N" header; any other comment is ignored.
std::optional<std::size_t> node_count_hint(std::string_view comment) {
  comment.remove_prefix(1);
  comment = trim(comment);
  constexpr std::string_view kKey = "nodes:";
  if (comment.substr(0, kKey.size()) != kKey) return std::nullopt;
  comment = trim(comment.substr(kKey.size()));
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(comment.data(), comment.data() + comment.size(), value);
  if (ec != std::errc{} || ptr != comment.data() + comment.size()) return std::nullopt;
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::size_t node_count = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;

    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (auto hint = node_count_hint(line)) node_count = std::max(node_count, *hint);
      continue;
    }

    std::string_view rest = line;
    auto first = next_token(rest);
    auto second = next_token(rest);
    auto third = next_token(rest);
    if (second.empty() || !trim(rest).empty()) {
      throw ParseError(line_no, "expected 'u v' or 'u v w', got '" + std::string(line) + "'");
    }
    Edge e{parse_node(first, line_no), parse_node(second, line_no), 1.0};
    if (!third.empty()) e.weight = parse_weight(third, line_no);
    node_count = std::max<std::size_t>(node_count, std::max(e.u, e.v) + std::size_t{1});
    edges.push_back(e);
  }
  return Graph::from_edges(node_count, std::move(edges));
}

Graph load_edge_list(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw Error("failed reading edge list");
  return parse_edge_list(text);
}

Graph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open edge list '" + path.string() + "'");
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# nodes: " << g.node_count() << '\n';
  std::array<char, 64> buf{};
  for (const auto& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (e.weight != 1.0) {
      auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), e.weight);
      out << ' ' << std::string_view(buf.data(), static_cast<std::size_t>(ptr - buf.data()));
    }
    out << '\n';
  }
}

Graph karate_club() {
  static constexpr std::pair<NodeId, NodeId> kFriendships[] = {
      {0, 1},   {0, 2},   {0, 3},   {0, 4},   {0, 5},   {0, 6},   {0, 7},   {0, 8},
      {0, 10},  {0, 11},  {0, 12},  {0, 13},  {0, 17},  {0, 19},  {0, 21},  {0, 31},
      {1, 2},   {1, 3},   {1, 7},   {1, 13},  {1, 17},  {1, 19},  {1, 21},  {1, 30},
      {2, 3},   {2, 7},   {2, 8},   {2, 9},   {2, 13},  {2, 27},  {2, 28},  {2, 32},
      {3, 7},   {3, 12},  {3, 13},  {4, 6},   {4, 10},  {5, 6},   {5, 10},  {5, 16},
      {6, 16},  {8, 30},  {8, 32},  {8, 33},  {9, 33},  {13, 33}, {14, 32}, {14, 33},
      {15, 32}, {15, 33}, {18, 32}, {18, 33}, {19, 33}, {20, 32}, {20, 33}, {22, 32},
      {22, 33}, {23, 25}, {23, 27}, {23, 29}, {23, 32}, {23, 33}, {24, 25}, {24, 27},
      {24, 31}, {25, 31}, {26, 29}, {26, 33}, {27, 33}, {28, 31}, {28, 33}, {29, 32},
      {29, 33}, {30, 32}, {30, 33}, {31, 32}, {31, 33}, {32, 33},
  };
  std::vector<Edge> edges;
  edges.reserve(std::size(kFriendships));
  for (auto [u, v] : kFriendships) edges.push_back({u, v, 1.0});
  return Graph::from_edges(34, std::move(edges));
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError("edge probability must lie in [0, 1], got " + std::to_string(p));
  }
  // mt19937_64 output is fixed by the standard; distributions are not, so the
  // uniform draw is built from the raw bits.
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < p) edges.push_back({u, v, 1.0});
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace commdetect
