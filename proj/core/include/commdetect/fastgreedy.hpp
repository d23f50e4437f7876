#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <unordered_map>
#include <vector>

#include "commdetect/dendrogram.hpp"
#include "commdetect/graph.hpp"
#include "commdetect/partition.hpp"

namespace commdetect {

// Greedy modularity agglomeration (Clauset-Newman-Moore) on unit-weight
// graphs.
//
// All modularity changes are multiples of 1/(2m)^2 on unit-weight graphs, so
// the store keeps them as exact integers in those units. Comparisons and
// ties are therefore exact; the public accessors convert to real values.

// a_i = k_i / 2m, kept as the integer degree sum of each community.
class AArray {
 public:
  AArray() = default;
  AArray(std::vector<std::int64_t> degree_sums, std::int64_t two_m)
      : degree_sums_(std::move(degree_sums)), two_m_(two_m) {}

  double operator[](Label c) const { return static_cast<double>(degree_sums_[c]) / two_m_; }
  std::int64_t degree_sum(Label c) const { return degree_sums_[c]; }
  std::size_t size() const noexcept { return degree_sums_.size(); }

  void absorb(Label from, Label into) {
    degree_sums_[into] += degree_sums_[from];
    degree_sums_[from] = 0;
  }

 private:
  std::vector<std::int64_t> degree_sums_;
  std::int64_t two_m_ = 1;
};

// Sparse symmetric Delta-Q matrix with one hash map per row. Only pairs of
// communities joined by at least one edge have an entry.
class DeltaQStore {
 public:
  struct Cell {
    std::int64_t scaled = 0;  // Delta-Q * (2m)^2
    std::uint64_t stamp = 0;
  };
  using Row = std::unordered_map<Label, Cell>;

  DeltaQStore() = default;
  DeltaQStore(std::size_t community_count, std::int64_t two_m);

  std::size_t size() const noexcept { return rows_.size(); }
  std::size_t live_count() const noexcept { return live_; }
  bool alive(Label c) const { return alive_[c]; }
  const Row& row(Label c) const;

  bool contains(Label i, Label j) const;
  std::optional<double> dq(Label i, Label j) const;
  double to_real(std::int64_t scaled) const { return static_cast<double>(scaled) / scale_; }

  // Writes both (i, j) and (j, i) under a fresh stamp and returns the stamp.
  std::uint64_t set(Label i, Label j, std::int64_t scaled);
  void erase(Label i, Label j);
  void retire(Label c);

 private:
  std::vector<Row> rows_;
  std::vector<bool> alive_;
  std::size_t live_ = 0;
  std::uint64_t next_stamp_ = 1;
  double scale_ = 1.0;
};

// Single max-heap over every stored cell. Entries are never removed when a
// cell changes; a popped entry whose stamp no longer matches the store, or
// whose communities are dead, is discarded.
class GlobalHeap {
 public:
  struct Entry {
    std::int64_t scaled = 0;
    Label i = 0;  // i < j
    Label j = 0;
    std::uint64_t stamp = 0;
  };

  void push(const Entry& e) { heap_.push(e); }
  std::size_t size() const noexcept { return heap_.size(); }
  bool empty() const noexcept { return heap_.empty(); }
  const Entry& top() const { return heap_.top(); }
  void pop() { heap_.pop(); }

 private:
  // Larger Delta-Q first, then the smaller (i, j).
  struct Order {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.scaled != b.scaled) return a.scaled < b.scaled;
      if (a.i != b.i) return a.i > b.i;
      return a.j > b.j;
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, Order> heap_;
};

struct GreedyState {
  DeltaQStore store;
  GlobalHeap heap;
  AArray a;
};

// Singleton communities, Delta-Q_ij = 2 (1/2m - k_i k_j / (2m)^2) for every
// edge and a_i = k_i / 2m. Throws ValidationError on graphs without edges,
// with self-loops, or with non-unit weights.
GreedyState init_fastgreedy(const Graph& g);

struct Join {
  Label i = 0;
  Label j = 0;
  double dq = 0.0;
};

// Largest live Delta-Q, ties to the smallest (i, j) with i < j. Stale heap
// entries met on the way are dropped. Returns nullopt when no connected pair
// of live communities remains.
std::optional<Join> best_join(GreedyState& state);

// Joins i into j; the result keeps label j. Throws ValidationError when
// either community is dead, i == j, or the pair is not connected.
void join(GreedyState& state, Label i, Label j);

struct TraceStep {
  std::size_t step = 0;
  Label i = 0;
  Label j = 0;
  double dq = 0.0;
  double q = 0.0;
  std::size_t num_communities = 0;
};

struct FastGreedyResult {
  Dendrogram dendrogram{0};
  Partition best;
  double best_q = 0.0;
  std::vector<TraceStep> trace;
};

// Joins until no connected pair remains, then joins the leftover components
// in ascending label order (Delta-Q = -2 a_i a_j), giving n - 1 merges.
FastGreedyResult fastgreedy(const Graph& g);

}  // namespace commdetect
