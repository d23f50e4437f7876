#include "commdetect/girvan_newman.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>

#include "commdetect/errors.hpp"

namespace commdetect {
namespace {

// Mutable view of a graph whose edges can be switched off.
class WorkingGraph {
 public:
  struct Slot {
    NodeId node;
    std::size_t edge;
  };

  explicit WorkingGraph(const Graph& g) : edges_(g.edges().begin(), g.edges().end()) {
    adjacency_.resize(g.node_count());
    alive_.assign(edges_.size(), true);
    for (std::size_t id = 0; id < edges_.size(); ++id) {
      const auto& e = edges_[id];
      if (e.u == e.v) {
        alive_[id] = false;  // self-loops lie on no shortest path
        continue;
      }
      adjacency_[e.u].push_back({e.v, id});
      adjacency_[e.v].push_back({e.u, id});
    }
    alive_count_ = static_cast<std::size_t>(std::count(alive_.begin(), alive_.end(), true));
  }

  std::size_t node_count() const { return adjacency_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Slot>& slots(NodeId v) const { return adjacency_[v]; }
  bool alive(std::size_t edge) const { return alive_[edge]; }
  std::size_t alive_count() const { return alive_count_; }

  void remove(std::size_t edge) {
    if (alive_[edge]) --alive_count_;
    alive_[edge] = false;
  }

  // Nodes reachable from `start` over live edges, in ascending id order.
  std::vector<NodeId> component_of(NodeId start) const {
    std::vector<bool> seen(node_count(), false);
    std::vector<NodeId> out{start};
    seen[start] = true;
    for (std::size_t head = 0; head < out.size(); ++head) {
      for (const auto& s : adjacency_[out[head]]) {
        if (alive_[s.edge] && !seen[s.node]) {
          seen[s.node] = true;
          out.push_back(s.node);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Graph remaining() const {
    std::vector<Edge> kept;
    for (std::size_t id = 0; id < edges_.size(); ++id) {
      if (alive_[id] || edges_[id].u == edges_[id].v) kept.push_back(edges_[id]);
    }
    return Graph::from_edges(node_count(), std::move(kept));
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Slot>> adjacency_;
  std::vector<bool> alive_;
  std::size_t alive_count_ = 0;
};

// Scratch space for one root's shortest-path tree, reused across roots.
struct Sweep {
  explicit Sweep(std::size_t n) : level(n, -1), paths(n, 0.0), credit(n, 0.0) {}

  std::vector<std::int64_t> level;
  std::vector<double> paths;
  std::vector<double> credit;
  std::vector<NodeId> order;
};

// Adds root's contribution to every live edge of its component. Credit flows
// bottom-up: node w passes 1 + (credit from below) to its parents, split in
// proportion to their shortest-path counts.
void accumulate_from(const WorkingGraph& wg, NodeId root, Sweep& sw, std::vector<double>& scores) {
  sw.order.clear();
  sw.order.push_back(root);
  sw.level[root] = 0;
  sw.paths[root] = 1.0;
  for (std::size_t head = 0; head < sw.order.size(); ++head) {
    const NodeId v = sw.order[head];
    for (const auto& s : wg.slots(v)) {
      if (!wg.alive(s.edge)) continue;
      if (sw.level[s.node] < 0) {
        sw.level[s.node] = sw.level[v] + 1;
        sw.order.push_back(s.node);
      }
      if (sw.level[s.node] == sw.level[v] + 1) sw.paths[s.node] += sw.paths[v];
    }
  }
  for (auto it = sw.order.rbegin(); it != sw.order.rend(); ++it) {
    const NodeId w = *it;
    const double upward = 1.0 + sw.credit[w];
    for (const auto& s : wg.slots(w)) {
      if (!wg.alive(s.edge) || sw.level[s.node] != sw.level[w] - 1) continue;
      const double share = sw.paths[s.node] / sw.paths[w] * upward;
      scores[s.edge] += share;
      sw.credit[s.node] += share;
    }
  }
  for (NodeId v : sw.order) {
    sw.level[v] = -1;
    sw.paths[v] = 0.0;
    sw.credit[v] = 0.0;
  }
}

// Recomputes the scores of every live edge inside `nodes`, which must be a
// union of whole components. Each unordered pair is seen from both ends, so
// the sums are halved.
void rescore(const WorkingGraph& wg, const std::vector<NodeId>& nodes, std::vector<double>& scores) {
  std::vector<bool> inside(wg.node_count(), false);
  for (NodeId v : nodes) inside[v] = true;
  for (std::size_t id = 0; id < wg.edges().size(); ++id) {
    if (inside[wg.edges()[id].u]) scores[id] = 0.0;
  }
  Sweep sw(wg.node_count());
  for (NodeId root : nodes) accumulate_from(wg, root, sw, scores);
  for (std::size_t id = 0; id < wg.edges().size(); ++id) {
    if (inside[wg.edges()[id].u]) scores[id] *= 0.5;
  }
}

std::vector<NodeId> all_nodes(std::size_t n) {
  std::vector<NodeId> nodes(n);
  std::iota(nodes.begin(), nodes.end(), NodeId{0});
  return nodes;
}

void check_target(const Graph& g, std::size_t target) {
  if (target < 1 || target > g.node_count()) {
    throw ValidationError("target community count " + std::to_string(target) +
                          " must lie in 1.." + std::to_string(g.node_count()));
  }
}

std::size_t component_count(const Graph& g) {
  return connected_components(g).num_communities();
}

}  // namespace

BfsTree bfs_tree(const Graph& g, NodeId root) {
  const std::size_t n = g.node_count();
  if (root >= n) throw ValidationError("root " + std::to_string(root) + " out of range");
  BfsTree tree;
  tree.root = root;
  tree.level.assign(n, -1);
  tree.paths.assign(n, 0.0);
  tree.parents.assign(n, {});
  tree.level[root] = 0;
  tree.paths[root] = 1.0;
  std::queue<NodeId> frontier;
  frontier.push(root);
  while (!frontier.empty()) {
    const NodeId v = frontier.front();
    frontier.pop();
    for (const auto& nb : g.neighbors(v)) {
      if (tree.level[nb.node] < 0) {
        tree.level[nb.node] = tree.level[v] + 1;
        frontier.push(nb.node);
      }
      if (tree.level[nb.node] == tree.level[v] + 1) {
        tree.paths[nb.node] += tree.paths[v];
        tree.parents[nb.node].push_back(v);
      }
    }
  }
  return tree;
}

double EdgeScores::score(NodeId u, NodeId v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), Edge{u, v, 0.0}, [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  if (it == edges.end() || it->u != u || it->v != v) {
    throw ValidationError("no edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  }
  return scores[static_cast<std::size_t>(it - edges.begin())];
}

namespace {

// Scores that agree to about 30 significant bits count as equal, so rounding
// noise from different summation orders cannot override the edge id order.
double tie_key(double score) {
  int exp = 0;
  const double mantissa = std::frexp(score, &exp);
  return std::ldexp(std::round(std::ldexp(mantissa, 30)), exp - 30);
}

}  // namespace

EdgeScores edge_betweenness(const Graph& g) {
  const WorkingGraph wg(g);
  EdgeScores out;
  out.edges.assign(g.edges().begin(), g.edges().end());
  out.scores.assign(out.edges.size(), 0.0);
  rescore(wg, all_nodes(g.node_count()), out.scores);
  return out;
}

DivisiveResult girvan_newman(const Graph& g, std::size_t target_communities) {
  check_target(g, target_communities);
  WorkingGraph wg(g);
  std::vector<double> scores(wg.edges().size(), 0.0);
  rescore(wg, all_nodes(g.node_count()), scores);
  std::size_t components = component_count(g);

  DivisiveResult result;
  while (components < target_communities && wg.alive_count() > 0) {
    std::size_t best = wg.edges().size();
    for (std::size_t id = 0; id < wg.edges().size(); ++id) {
      if (wg.alive(id) && (best == wg.edges().size() || tie_key(scores[id]) > tie_key(scores[best]))) best = id;
    }
    const Edge cut = wg.edges()[best];
    result.cuts.push_back({cut.u, cut.v, scores[best]});
    wg.remove(best);
    scores[best] = 0.0;

    auto affected = wg.component_of(cut.u);
    if (!std::binary_search(affected.begin(), affected.end(), cut.v)) {
      ++components;
      auto other = wg.component_of(cut.v);
      affected.insert(affected.end(), other.begin(), other.end());
      std::sort(affected.begin(), affected.end());
    }
    rescore(wg, affected, scores);
  }
  result.partition = connected_components(wg.remaining());
  return result;
}

DivisiveResult girvan_newman_static(const Graph& g, std::size_t target_communities) {
  check_target(g, target_communities);
  WorkingGraph wg(g);
  std::vector<double> scores(wg.edges().size(), 0.0);
  rescore(wg, all_nodes(g.node_count()), scores);
  std::size_t components = component_count(g);

  std::vector<std::size_t> order;
  for (std::size_t id = 0; id < wg.edges().size(); ++id) {
    if (wg.alive(id)) order.push_back(id);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return tie_key(scores[a]) > tie_key(scores[b]); });

  DivisiveResult result;
  for (std::size_t id : order) {
    if (components >= target_communities) break;
    const Edge cut = wg.edges()[id];
    result.cuts.push_back({cut.u, cut.v, scores[id]});
    wg.remove(id);
    const auto reach = wg.component_of(cut.u);
    if (!std::binary_search(reach.begin(), reach.end(), cut.v)) ++components;
  }
  result.partition = connected_components(wg.remaining());
  return result;
}

}  // namespace commdetect
