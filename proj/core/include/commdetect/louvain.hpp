#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "commdetect/graph.hpp"
#include "commdetect/partition.hpp"

namespace commdetect {

enum class LouvainVariant { Normal, Total, NoMerge, TotalNoMerge, Exp };

std::string_view to_string(LouvainVariant v);
LouvainVariant parse_variant(std::string_view name);

// Moves with a computed gain at or below this are not applied.
inline constexpr double kMinMoveGain = 1e-12;

// Louvain bookkeeping over one level graph. Communities are identified by
// node ids of that graph: every node starts alone in community i.
//
// sigma_in[c] is sum_{i,j in c} A_ij, i.e. twice the internal edge weight
// (self-loops included twice). sigma_tot[c] is the sum of member degrees.
class CommunityState {
 public:
  static constexpr Label kDetached = std::numeric_limits<Label>::max();

  // Throws ValidationError if the graph has no edges.
  explicit CommunityState(const Graph& g);
  // Start labels are renumbered canonically, so community ids stay below n.
  CommunityState(const Graph& g, const Partition& start);
  // The state keeps a pointer to the graph, so temporaries are refused.
  explicit CommunityState(Graph&&) = delete;
  CommunityState(Graph&&, const Partition&) = delete;

  const Graph& graph() const noexcept { return *graph_; }
  double m() const noexcept { return m_; }
  std::size_t node_count() const noexcept { return assignment_.size(); }

  Label community(NodeId i) const { return assignment_[i]; }
  double sigma_in(Label c) const { return sigma_in_[c]; }
  double sigma_tot(Label c) const { return sigma_tot_[c]; }
  double k(NodeId i) const { return k_[i]; }

  // Sum of edge weights from i to members of c, excluding i itself.
  double k_in(NodeId i, Label c) const;

  // Detaches i from its community; it then belongs to none.
  void remove(NodeId i);
  void insert(NodeId i, Label c);

  Partition partition() const { return Partition(assignment_); }

 private:
  void apply(NodeId i, Label c, double sign, double k_i_in);

  const Graph* graph_;
  double m_ = 0.0;
  std::vector<Label> assignment_;
  std::vector<double> k_;
  std::vector<double> sigma_in_;
  std::vector<double> sigma_tot_;
};

// Gain of inserting the detached node i into community c:
//   [(S_in + 2 k_i,in)/2m - ((S_tot + k_i)/2m)^2]
//     - [S_in/2m - (S_tot/2m)^2 - (k_i/2m)^2]
// Throws ValidationError if i is not detached.
double delta_q_insert(const CommunityState& state, NodeId i, Label c);

// Full modularity change of moving i from its community into c: i is
// detached, then the insertion gain into c is compared with the gain of
// re-inserting it where it was. A self-move yields exactly 0. The state is
// left unchanged.
double move_gain(CommunityState& state, NodeId i, Label c);

// The insertion formula evaluated while i still sits in its community, as it
// is usually quoted. It ignores the cost of leaving the old community, so a
// "move" into i's own community reports a spurious non-zero gain.
double naive_move_gain(const CommunityState& state, NodeId i, Label c);

// One sweep over `order`. Each node is detached and re-inserted into the
// candidate (its old community or a neighbouring one) with the largest gain;
// a move needs a gain above kMinMoveGain and ties go to the lowest community
// id. With use_total_formula, gains are full modularity recomputations.
// Returns whether any node changed community.
bool local_move_pass(CommunityState& state, std::span<const NodeId> order, bool use_total_formula);

// Contracts each community to one node. Intra-community weight becomes a
// self-loop; parallel inter-community edges are summed.
struct AggregateGraph {
  Graph graph;
  // Aggregate node for every node of the input graph.
  std::vector<NodeId> node_of;
  std::size_t level = 0;
};

AggregateGraph aggregate(const Graph& g, const Partition& p, std::size_t level = 1);

struct LouvainResult {
  Partition partition;
  double modularity = 0.0;
  std::size_t passes = 0;
};

// Throws ValidationError if g has no edges.
LouvainResult louvain(const Graph& g, LouvainVariant variant, std::uint64_t seed);

struct RunStats {
  LouvainVariant variant = LouvainVariant::Normal;
  std::vector<double> q_values;
  std::vector<double> runtimes_ms;
  double max = 0.0;
  double min = 0.0;
  double mean = 0.0;
  double mean_runtime_ms = 0.0;

  std::size_t runs() const noexcept { return q_values.size(); }
};

// Runs seeds base_seed .. base_seed + runs - 1. Timing covers the louvain
// call only. Up to `threads` runs execute concurrently.
RunStats run_stats(const Graph& g, LouvainVariant variant, std::size_t runs, std::uint64_t base_seed,
                   std::size_t threads = 1);

}  // namespace commdetect
