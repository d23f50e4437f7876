#include "commdetect/fastgreedy.hpp"

#include <algorithm>
#include <string>

#include "commdetect/errors.hpp"

namespace commdetect {

DeltaQStore::DeltaQStore(std::size_t community_count, std::int64_t two_m)
    : rows_(community_count), alive_(community_count, true), live_(community_count),
      scale_(static_cast<double>(two_m) * static_cast<double>(two_m)) {}

const DeltaQStore::Row& DeltaQStore::row(Label c) const {
  if (c >= rows_.size() || !alive_[c]) {
    throw ValidationError("community " + std::to_string(c) + " is not live");
  }
  return rows_[c];
}

bool DeltaQStore::contains(Label i, Label j) const {
  return i < rows_.size() && alive_[i] && rows_[i].count(j) > 0;
}

std::optional<double> DeltaQStore::dq(Label i, Label j) const {
  if (!contains(i, j)) return std::nullopt;
  return to_real(rows_[i].at(j).scaled);
}

std::uint64_t DeltaQStore::set(Label i, Label j, std::int64_t scaled) {
  const std::uint64_t stamp = next_stamp_++;
  rows_[i][j] = {scaled, stamp};
  rows_[j][i] = {scaled, stamp};
  return stamp;
}

void DeltaQStore::erase(Label i, Label j) {
  rows_[i].erase(j);
  rows_[j].erase(i);
}

void DeltaQStore::retire(Label c) {
  if (!alive_[c]) return;
  rows_[c] = Row{};
  alive_[c] = false;
  --live_;
}

namespace {

void push_cell(GreedyState& state, Label a, Label b, std::int64_t scaled) {
  const std::uint64_t stamp = state.store.set(a, b, scaled);
  state.heap.push({scaled, std::min(a, b), std::max(a, b), stamp});
}

void require_live(const GreedyState& state, Label c) {
  if (c >= state.store.size() || !state.store.alive(c)) {
    throw ValidationError("community " + std::to_string(c) + " is not live");
  }
}

// Shared by join() and the final joins of disconnected remnants, where the
// pair has no entry of its own.
void join_unchecked(GreedyState& state, Label i, Label j) {
  const DeltaQStore::Row row_i = state.store.row(i);
  const DeltaQStore::Row row_j = state.store.row(j);
  const std::int64_t ki = state.a.degree_sum(i);
  const std::int64_t kj = state.a.degree_sum(j);

  for (const auto& [k, cell] : row_i) {
    if (k == j) continue;
    auto both = row_j.find(k);
    if (both != row_j.end()) {
      push_cell(state, j, k, cell.scaled + both->second.scaled);                  // (a)
    } else {
      push_cell(state, j, k, cell.scaled - 2 * kj * state.a.degree_sum(k));      // (b)
    }
  }
  for (const auto& [k, cell] : row_j) {
    if (k == i || row_i.count(k) > 0) continue;
    push_cell(state, j, k, cell.scaled - 2 * ki * state.a.degree_sum(k));        // (c)
  }
  for (const auto& [k, cell] : row_i) state.store.erase(i, k);
  state.store.retire(i);
  state.a.absorb(i, j);
}

}  // namespace

GreedyState init_fastgreedy(const Graph& g) {
  if (g.edge_count() == 0) throw ValidationError("fastgreedy needs a graph with at least one edge");
  if (g.has_self_loops()) throw ValidationError("fastgreedy needs a graph without self-loops");
  if (!g.is_unweighted()) throw ValidationError("fastgreedy supports unit-weight graphs only");

  const std::size_t n = g.node_count();
  const auto two_m = static_cast<std::int64_t>(2 * g.edge_count());
  std::vector<std::int64_t> degrees(n);
  for (NodeId i = 0; i < n; ++i) degrees[i] = static_cast<std::int64_t>(g.degree(i));

  GreedyState state{DeltaQStore(n, two_m), GlobalHeap{}, AArray(degrees, two_m)};
  // 2 (1/2m - k_i k_j / (2m)^2), scaled by (2m)^2.
  for (const auto& e : g.edges()) push_cell(state, e.u, e.v, 2 * two_m - 2 * degrees[e.u] * degrees[e.v]);
  return state;
}

std::optional<Join> best_join(GreedyState& state) {
  while (!state.heap.empty()) {
    const auto& top = state.heap.top();
    if (state.store.alive(top.i) && state.store.alive(top.j)) {
      const auto& row = state.store.row(top.i);
      auto it = row.find(top.j);
      if (it != row.end() && it->second.stamp == top.stamp) {
        return Join{top.i, top.j, state.store.to_real(top.scaled)};
      }
    }
    state.heap.pop();
  }
  return std::nullopt;
}

void join(GreedyState& state, Label i, Label j) {
  require_live(state, i);
  require_live(state, j);
  if (i == j) throw ValidationError("cannot join community " + std::to_string(i) + " with itself");
  if (!state.store.contains(i, j)) {
    throw ValidationError("communities " + std::to_string(i) + " and " + std::to_string(j) +
                          " share no edge");
  }
  join_unchecked(state, i, j);
}

FastGreedyResult fastgreedy(const Graph& g) {
  GreedyState state = init_fastgreedy(g);
  const std::size_t n = g.node_count();
  const double scale = static_cast<double>(2 * g.edge_count()) * static_cast<double>(2 * g.edge_count());

  // Running Q in units of 1/(2m)^2; starts at the all-singletons value.
  std::int64_t q_scaled = 0;
  for (NodeId i = 0; i < n; ++i) q_scaled -= state.a.degree_sum(i) * state.a.degree_sum(i);

  FastGreedyResult result;
  result.dendrogram = Dendrogram(n);
  std::vector<ClusterId> cluster_of(n);
  for (NodeId i = 0; i < n; ++i) cluster_of[i] = i;
  std::int64_t best_scaled = q_scaled;
  std::size_t best_step = 0;
  std::size_t live = n;

  auto record = [&](Label i, Label j, std::int64_t dq_scaled) {
    q_scaled += dq_scaled;
    --live;
    const double dq = static_cast<double>(dq_scaled) / scale;
    cluster_of[j] = result.dendrogram.merge(std::min(cluster_of[i], cluster_of[j]),
                                            std::max(cluster_of[i], cluster_of[j]), dq);
    const std::size_t step = result.dendrogram.merges().size();
    result.trace.push_back({step, i, j, dq, static_cast<double>(q_scaled) / scale, live});
    if (q_scaled > best_scaled) {
      best_scaled = q_scaled;
      best_step = step;
    }
  };

  while (auto next = best_join(state)) {
    const std::int64_t dq_scaled = state.store.row(next->i).at(next->j).scaled;
    join(state, next->i, next->j);
    record(next->i, next->j, dq_scaled);
  }

  // Remaining communities share no edges: join them in ascending label order.
  std::vector<Label> remnants;
  for (Label c = 0; c < n; ++c) {
    if (state.store.alive(c)) remnants.push_back(c);
  }
  for (std::size_t r = 1; r < remnants.size(); ++r) {
    const Label i = remnants[r - 1];
    const Label j = remnants[r];
    const std::int64_t dq_scaled = -2 * state.a.degree_sum(i) * state.a.degree_sum(j);
    join_unchecked(state, i, j);
    record(i, j, dq_scaled);
  }

  result.best = result.dendrogram.partition_after(best_step);
  result.best_q = static_cast<double>(best_scaled) / scale;
  return result;
}

}  // namespace commdetect
