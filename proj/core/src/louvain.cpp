#include "commdetect/louvain.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <unordered_map>

#include "commdetect/errors.hpp"
#include "commdetect/modularity.hpp"

namespace commdetect {

std::string_view to_string(LouvainVariant v) {
  switch (v) {
    case LouvainVariant::Normal: return "normal";
    case LouvainVariant::Total: return "total";
    case LouvainVariant::NoMerge: return "noMerge";
    case LouvainVariant::TotalNoMerge: return "totalNoMerge";
    case LouvainVariant::Exp: return "Exp";
  }
  return "unknown";
}

LouvainVariant parse_variant(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "normal") return LouvainVariant::Normal;
  if (lower == "total") return LouvainVariant::Total;
  if (lower == "nomerge") return LouvainVariant::NoMerge;
  if (lower == "totalnomerge") return LouvainVariant::TotalNoMerge;
  if (lower == "exp") return LouvainVariant::Exp;
  throw ValidationError("unknown Louvain variant '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// CommunityState

CommunityState::CommunityState(const Graph& g) : CommunityState(g, Partition::singletons(g.node_count())) {}

CommunityState::CommunityState(const Graph& g, const Partition& start)
    : graph_(&g), m_(g.total_weight()) {
  if (!(m_ > 0.0)) throw ValidationError("Louvain needs a graph with at least one edge");
  const std::size_t n = g.node_count();
  if (start.size() != n) throw ValidationError("start partition does not cover the graph");
  const Partition canon = start.canonical();
  assignment_.assign(n, kDetached);
  k_.resize(n);
  sigma_in_.assign(n, 0.0);
  sigma_tot_.assign(n, 0.0);
  for (NodeId i = 0; i < n; ++i) k_[i] = g.weighted_degree(i);
  for (NodeId i = 0; i < n; ++i) insert(i, canon[i]);
}

double CommunityState::k_in(NodeId i, Label c) const {
  double total = 0.0;
  for (const auto& nb : graph_->neighbors(i)) {
    if (assignment_[nb.node] == c) total += nb.weight;
  }
  return total;
}

void CommunityState::apply(NodeId i, Label c, double sign, double k_i_in) {
  sigma_tot_[c] += sign * k_[i];
  sigma_in_[c] += sign * (2.0 * k_i_in + 2.0 * graph_->self_loop(i));
}

void CommunityState::remove(NodeId i) {
  const Label c = assignment_.at(i);
  if (c == kDetached) throw ValidationError("node " + std::to_string(i) + " is already detached");
  assignment_[i] = kDetached;
  apply(i, c, -1.0, k_in(i, c));
}

void CommunityState::insert(NodeId i, Label c) {
  if (assignment_.at(i) != kDetached) {
    throw ValidationError("node " + std::to_string(i) + " must be detached before insertion");
  }
  if (c >= sigma_tot_.size()) throw ValidationError("community " + std::to_string(c) + " out of range");
  apply(i, c, +1.0, k_in(i, c));
  assignment_[i] = c;
}

// ---------------------------------------------------------------------------
// Gains

namespace {

double insertion_gain(double sigma_in, double sigma_tot, double k_i, double k_i_in, double m) {
  const double two_m = 2.0 * m;
  const double after_tot = (sigma_tot + k_i) / two_m;
  const double before_tot = sigma_tot / two_m;
  const double alone = k_i / two_m;
  return ((sigma_in + 2.0 * k_i_in) / two_m - after_tot * after_tot) -
         (sigma_in / two_m - before_tot * before_tot - alone * alone);
}

// Edge weight from i to each neighbouring community, in first-seen order.
struct NeighborWeights {
  std::vector<Label> communities;
  std::vector<double> weight_to;  // indexed by community, reset after use
  std::vector<bool> seen;

  explicit NeighborWeights(std::size_t n) : weight_to(n, 0.0), seen(n, false) {}

  void collect(const CommunityState& state, NodeId i) {
    for (const auto& nb : state.graph().neighbors(i)) {
      const Label c = state.community(nb.node);
      if (c == CommunityState::kDetached) continue;
      if (!seen[c]) {
        seen[c] = true;
        communities.push_back(c);
      }
      weight_to[c] += nb.weight;
    }
  }

  void clear() {
    for (Label c : communities) {
      seen[c] = false;
      weight_to[c] = 0.0;
    }
    communities.clear();
  }
};

// Modularity of the state's assignment with node i placed in c; i must be
// detached. Used by the total-formula variants.
double total_modularity_with(const CommunityState& state, NodeId i, Label c) {
  std::vector<Label> labels = state.partition().labels();
  labels[i] = c;
  return modularity(state.graph(), Partition(std::move(labels)));
}

struct Choice {
  Label community;
  double gain;  // relative to staying
};

// Best destination for detached node i whose previous community is `home`.
// Candidates are `home` and every neighbouring community; the winner needs a
// gain above kMinMoveGain over `home`, and near-equal gains go to the lower id.
Choice choose(const CommunityState& state, NodeId i, Label home, NeighborWeights& nw, bool use_total) {
  auto score = [&](Label c) {
    if (use_total) return total_modularity_with(state, i, c);
    return insertion_gain(state.sigma_in(c), state.sigma_tot(c), state.k(i), nw.weight_to[c], state.m());
  };
  const double stay = score(home);
  Choice best{home, 0.0};
  for (Label c : nw.communities) {
    if (c == home) continue;
    const double gain = score(c) - stay;
    if (gain <= kMinMoveGain) continue;
    if (best.community == home || gain > best.gain + kMinMoveGain ||
        (std::abs(gain - best.gain) <= kMinMoveGain && c < best.community)) {
      best = {c, gain};
    }
  }
  return best;
}

}  // namespace

namespace {

void check_community(const CommunityState& state, Label c) {
  if (c >= state.node_count()) throw ValidationError("community " + std::to_string(c) + " out of range");
}

}  // namespace

double delta_q_insert(const CommunityState& state, NodeId i, Label c) {
  check_community(state, c);
  if (state.community(i) != CommunityState::kDetached) {
    throw ValidationError("delta_q_insert expects node " + std::to_string(i) + " to be detached");
  }
  return insertion_gain(state.sigma_in(c), state.sigma_tot(c), state.k(i), state.k_in(i, c), state.m());
}

double move_gain(CommunityState& state, NodeId i, Label c) {
  check_community(state, c);
  const Label home = state.community(i);
  if (home == CommunityState::kDetached) {
    throw ValidationError("move_gain expects node " + std::to_string(i) + " to be placed");
  }
  if (c == home) return 0.0;
  state.remove(i);
  const double gain = delta_q_insert(state, i, c) - delta_q_insert(state, i, home);
  state.insert(i, home);
  return gain;
}

double naive_move_gain(const CommunityState& state, NodeId i, Label c) {
  check_community(state, c);
  return insertion_gain(state.sigma_in(c), state.sigma_tot(c), state.k(i), state.k_in(i, c), state.m());
}

bool local_move_pass(CommunityState& state, std::span<const NodeId> order, bool use_total_formula) {
  NeighborWeights nw(state.node_count());
  bool moved = false;
  for (NodeId i : order) {
    const Label home = state.community(i);
    state.remove(i);
    nw.collect(state, i);
    const Choice choice = choose(state, i, home, nw, use_total_formula);
    nw.clear();
    state.insert(i, choice.community);
    moved = moved || choice.community != home;
  }
  return moved;
}

// ---------------------------------------------------------------------------
// Aggregation

AggregateGraph aggregate(const Graph& g, const Partition& p, std::size_t level) {
  if (p.size() != g.node_count()) throw ValidationError("partition does not cover the graph");
  const Partition canon = p.canonical();
  const std::size_t k = canon.num_communities();

  auto key = [](Label a, Label b) { return (static_cast<std::uint64_t>(a) << 32) | b; };
  std::unordered_map<std::uint64_t, double> merged;
  std::vector<std::uint64_t> first_seen;
  for (const auto& e : g.edges()) {
    Label a = canon[e.u];
    Label b = canon[e.v];
    if (a > b) std::swap(a, b);
    auto [it, inserted] = merged.try_emplace(key(a, b), 0.0);
    if (inserted) first_seen.push_back(it->first);
    it->second += e.weight;
  }
  std::vector<Edge> edges;
  edges.reserve(first_seen.size());
  for (std::uint64_t kk : first_seen) {
    edges.push_back({static_cast<NodeId>(kk >> 32), static_cast<NodeId>(kk & 0xffffffffu), merged[kk]});
  }
  AggregateGraph out{Graph::from_edges(k, std::move(edges)), {}, level};
  out.node_of.assign(canon.labels().begin(), canon.labels().end());
  return out;
}

// ---------------------------------------------------------------------------
// Driver

namespace {

bool uses_total(LouvainVariant v) {
  return v == LouvainVariant::Total || v == LouvainVariant::TotalNoMerge;
}

bool merges(LouvainVariant v) {
  return v == LouvainVariant::Normal || v == LouvainVariant::Total || v == LouvainVariant::Exp;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Label{0}); }

  Label find(Label x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // The smaller root wins so that the outcome does not depend on call order.
  void unite(Label a, Label b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }

  std::vector<Label> parent;
};

// One Exp pass: every node's preferred community is computed against the
// same state, then each proposal unites the node's community with its
// target. Chains (1 -> c2, 2 -> c3, ...) collapse into one community.
bool chained_merge_pass(CommunityState& state) {
  const std::size_t n = state.node_count();
  NeighborWeights nw(n);
  UnionFind sets(n);
  bool proposed = false;
  for (NodeId i = 0; i < n; ++i) {
    const Label home = state.community(i);
    state.remove(i);
    nw.collect(state, i);
    const Choice choice = choose(state, i, home, nw, false);
    nw.clear();
    state.insert(i, home);
    if (choice.community != home) {
      sets.unite(home, choice.community);
      proposed = true;
    }
  }
  if (!proposed) return false;
  std::vector<Label> labels(n);
  for (NodeId i = 0; i < n; ++i) labels[i] = sets.find(state.community(i));
  state = CommunityState(state.graph(), Partition(std::move(labels)));
  return true;
}

}  // namespace

LouvainResult louvain(const Graph& g, LouvainVariant variant, std::uint64_t seed) {
  if (!(g.total_weight() > 0.0)) throw ValidationError("Louvain needs a graph with at least one edge");
  std::mt19937_64 rng(seed);
  const bool total = uses_total(variant);

  Graph level_graph = g;
  std::vector<NodeId> node_of(g.node_count());
  std::iota(node_of.begin(), node_of.end(), NodeId{0});
  LouvainResult result;
  for (std::size_t level = 0;; ++level) {
    CommunityState state(level_graph);
    bool changed = false;
    if (variant == LouvainVariant::Exp) {
      // Every level starts from singletons, where moving a node into c_j is
      // the same as merging with node j, so one chained pass per level.
      if (chained_merge_pass(state)) {
        ++result.passes;
        changed = true;
      }
    } else {
      std::vector<NodeId> order(level_graph.node_count());
      std::iota(order.begin(), order.end(), NodeId{0});
      std::shuffle(order.begin(), order.end(), rng);
      while (local_move_pass(state, order, total)) {
        ++result.passes;
        changed = true;
      }
      ++result.passes;  // the final sweep that confirmed convergence
    }
    if (!changed) break;

    const Partition level_partition = state.partition().canonical();
    for (auto& x : node_of) x = level_partition[x];
    if (!merges(variant)) break;
    AggregateGraph next = aggregate(level_graph, level_partition, level + 1);
    level_graph = std::move(next.graph);
  }

  result.partition = Partition(std::vector<Label>(node_of.begin(), node_of.end())).canonical();
  result.modularity = modularity(g, result.partition);
  return result;
}

RunStats run_stats(const Graph& g, LouvainVariant variant, std::size_t runs, std::uint64_t base_seed,
                   std::size_t threads) {
  if (runs == 0) throw ValidationError("run_stats needs at least one run");
  RunStats stats;
  stats.variant = variant;
  stats.q_values.assign(runs, 0.0);
  stats.runtimes_ms.assign(runs, 0.0);

  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t r = first; r < runs; r += stride) {
      const auto start = std::chrono::steady_clock::now();
      const LouvainResult res = louvain(g, variant, base_seed + r);
      const auto stop = std::chrono::steady_clock::now();
      stats.q_values[r] = res.modularity;
      stats.runtimes_ms[r] = std::chrono::duration<double, std::milli>(stop - start).count();
    }
  };
  threads = std::clamp<std::size_t>(threads, 1, runs);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  }

  stats.max = *std::max_element(stats.q_values.begin(), stats.q_values.end());
  stats.min = *std::min_element(stats.q_values.begin(), stats.q_values.end());
  // Clamped: rounding in the sum may otherwise push the mean of identical
  // values just outside [min, max].
  stats.mean = std::clamp(
      std::accumulate(stats.q_values.begin(), stats.q_values.end(), 0.0) / static_cast<double>(runs),
      stats.min, stats.max);
  stats.mean_runtime_ms =
      std::accumulate(stats.runtimes_ms.begin(), stats.runtimes_ms.end(), 0.0) / static_cast<double>(runs);
  return stats;
}

}  // namespace commdetect
