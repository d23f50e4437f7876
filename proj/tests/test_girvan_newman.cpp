#include <gtest/gtest.h>

#include "commdetect/commdetect.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace commdetect;

namespace {

// Two triangles {0,1,2} and {3,4,5} joined by the bridge 2-3.
Graph bridged_triangles() { return fixtures::make(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}}); }

void expect_matches_oracle(const Graph& g) {
  const EdgeScores scores = edge_betweenness(g);
  const auto expected = oracle::betweenness(g);
  ASSERT_EQ(scores.edges.size(), g.edge_count());
  for (std::size_t e = 0; e < scores.edges.size(); ++e) {
    const Edge& edge = scores.edges[e];
    if (edge.u == edge.v) continue;
    EXPECT_NEAR(scores.scores[e], expected.at({edge.u, edge.v}), 1e-9) << edge.u << "-" << edge.v;
  }
}

}  // namespace

TEST(BfsTree, Path) {
  BfsTree t = bfs_tree(fixtures::path(3), 0);
  EXPECT_EQ(t.level, (std::vector<std::int64_t>{0, 1, 2}));
  EXPECT_EQ(t.paths, (std::vector<double>{1, 1, 1}));
}

TEST(BfsTree, CycleOppositeNode) {
  BfsTree t = bfs_tree(fixtures::cycle(4), 0);
  EXPECT_EQ(t.level[2], 2);
  EXPECT_EQ(t.paths[2], 2.0);
  EXPECT_EQ(t.parents[2], (std::vector<NodeId>{1, 3}));
}

TEST(BfsTree, StarFromLeaf) {
  BfsTree t = bfs_tree(fixtures::star(3), 1);
  EXPECT_EQ(t.level, (std::vector<std::int64_t>{1, 0, 2, 2}));
  EXPECT_EQ(t.paths, (std::vector<double>{1, 1, 1, 1}));
}

TEST(BfsTree, UnreachableAndParentSum) {
  Graph g = fixtures::make(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  BfsTree t = bfs_tree(g, 0);
  EXPECT_FALSE(t.reached(4));
  EXPECT_EQ(t.level[4], -1);
  for (NodeId v = 1; v < 4; ++v) {
    double sum = 0.0;
    for (NodeId p : t.parents[v]) sum += t.paths[p];
    EXPECT_EQ(t.paths[v], sum);
  }
  EXPECT_THROW(bfs_tree(g, 5), ValidationError);
}

TEST(Betweenness, Examples) {
  EXPECT_EQ(edge_betweenness(fixtures::path(3)).score(0, 1), 2.0);
  EdgeScores star = edge_betweenness(fixtures::star(3));
  for (double s : star.scores) EXPECT_EQ(s, 3.0);
  EXPECT_EQ(edge_betweenness(fixtures::path(2)).score(1, 0), 1.0);
  EXPECT_THROW(edge_betweenness(fixtures::path(3)).score(0, 2), ValidationError);
}

TEST(Betweenness, MatchesOracleOnSuite) {
  for (const Graph& g : fixtures::small_suite()) expect_matches_oracle(g);
}

TEST(Betweenness, TreeScoresAreSideProducts) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const std::size_t n = 2 + s % 15;
    Graph g = oracle::random_tree(n, s);
    const EdgeScores scores = edge_betweenness(g);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const Edge& edge = g.edges()[e];
      // Size of the side containing u once the edge is gone.
      std::vector<Edge> rest;
      for (const Edge& other : g.edges()) {
        if (!(other == edge)) rest.push_back(other);
      }
      Partition parts = connected_components(Graph::from_edges(n, rest));
      std::size_t side = 0;
      for (NodeId i = 0; i < n; ++i) side += parts[i] == parts[edge.u];
      EXPECT_NEAR(scores.scores[e], static_cast<double>(side * (n - side)), 1e-9);
    }
  }
}

TEST(Betweenness, KarateMatchesOracle) { expect_matches_oracle(karate_club()); }

TEST(GirvanNewman, BridgeIsCutFirst) {
  for (auto* algo : {&girvan_newman, &girvan_newman_static}) {
    DivisiveResult r = (*algo)(bridged_triangles(), 2);
    ASSERT_EQ(r.cuts.size(), 1u);
    EXPECT_EQ(r.cuts[0].u, 2u);
    EXPECT_EQ(r.cuts[0].v, 3u);
    EXPECT_EQ(r.cuts[0].score, 9.0);
    EXPECT_EQ(r.partition.labels(), (std::vector<Label>{0, 0, 0, 1, 1, 1}));
  }
}

TEST(GirvanNewman, TargetOneCutsNothing) {
  DivisiveResult r = girvan_newman(karate_club(), 1);
  EXPECT_TRUE(r.cuts.empty());
  EXPECT_EQ(r.partition.num_communities(), 1u);
}

TEST(GirvanNewman, KarateEightCommunities) {
  const Graph g = karate_club();
  DivisiveResult r = girvan_newman(g, 8);
  EXPECT_EQ(r.partition.num_communities(), 8u);
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    bool cut = false;
    for (const EdgeCut& c : r.cuts) cut |= c.u == e.u && c.v == e.v;
    if (!cut) kept.push_back(e);
  }
  EXPECT_EQ(r.partition, connected_components(Graph::from_edges(34, kept)));
}

TEST(GirvanNewman, TargetNodeCountRemovesEverything) {
  Graph g = random_graph(10, 0.4, 3);
  EXPECT_EQ(girvan_newman(g, 10).cuts.size(), g.edge_count());
  EXPECT_EQ(girvan_newman_static(g, 10).cuts.size(), g.edge_count());
  EXPECT_EQ(girvan_newman(g, 10).partition.num_communities(), 10u);
}

TEST(GirvanNewman, InvalidTarget) {
  EXPECT_THROW(girvan_newman(fixtures::path(3), 0), ValidationError);
  EXPECT_THROW(girvan_newman(fixtures::path(3), 4), ValidationError);
  EXPECT_THROW(girvan_newman_static(fixtures::path(3), 4), ValidationError);
}

TEST(GirvanNewman, Deterministic) {
  Graph g = random_graph(20, 0.25, 8);
  const auto a = girvan_newman(g, 5);
  const auto b = girvan_newman(g, 5);
  ASSERT_EQ(a.cuts.size(), b.cuts.size());
  for (std::size_t i = 0; i < a.cuts.size(); ++i) {
    EXPECT_EQ(a.cuts[i].u, b.cuts[i].u);
    EXPECT_EQ(a.cuts[i].v, b.cuts[i].v);
  }
}

TEST(GirvanNewman, IterativeCutsFollowRecomputedMaximum) {
  // Each cut must be the oracle's maximum on the graph left by earlier cuts.
  Graph g = random_graph(11, 0.4, 21);
  DivisiveResult r = girvan_newman(g, 11);
  std::vector<Edge> remaining(g.edges().begin(), g.edges().end());
  for (const EdgeCut& c : r.cuts) {
    Graph current = Graph::from_edges(11, remaining);
    const auto scores = oracle::betweenness(current);
    double best = -1.0;
    std::pair<NodeId, NodeId> arg;
    for (const auto& [edge, s] : scores) {
      if (s > best + 1e-9) {
        best = s;
        arg = edge;
      }
    }
    EXPECT_EQ(std::make_pair(c.u, c.v), arg);
    EXPECT_NEAR(c.score, best, 1e-9);
    std::erase_if(remaining, [&](const Edge& e) { return e.u == c.u && e.v == c.v; });
  }
}

TEST(GirvanNewmanStatic, PathOfFive) {
  // Initial scores on 0-1-2-3-4 are 4, 6, 6, 4.
  DivisiveResult r = girvan_newman_static(fixtures::path(5), 3);
  ASSERT_EQ(r.cuts.size(), 2u);
  EXPECT_EQ(r.partition.num_communities(), 3u);
  EXPECT_EQ(r.cuts[0].score, 6.0);
  EXPECT_EQ(r.cuts[1].score, 6.0);
  EXPECT_EQ(r.partition.labels(), (std::vector<Label>{0, 0, 1, 2, 2}));
}

TEST(GirvanNewmanStatic, CutsInInitialScoreOrder) {
  Graph g = karate_club();
  DivisiveResult r = girvan_newman_static(g, 34);
  ASSERT_EQ(r.cuts.size(), g.edge_count());
  // Equal scores may differ in the last bits depending on summation order.
  for (std::size_t i = 1; i < r.cuts.size(); ++i) EXPECT_GE(r.cuts[i - 1].score + 1e-9, r.cuts[i].score);
}

TEST(GirvanNewmanStatic, FirstCutMatchesIterative) {
  std::vector<Graph> graphs = fixtures::small_suite(40);
  graphs.push_back(karate_club());
  for (const Graph& g : graphs) {
    if (g.edge_count() == 0) continue;
    const auto target = std::min<std::size_t>(g.node_count(), connected_components(g).num_communities() + 1);
    const auto a = girvan_newman(g, target);
    const auto b = girvan_newman_static(g, target);
    ASSERT_FALSE(a.cuts.empty());
    ASSERT_FALSE(b.cuts.empty());
    EXPECT_EQ(a.cuts[0].u, b.cuts[0].u);
    EXPECT_EQ(a.cuts[0].v, b.cuts[0].v);
  }
}

TEST(GirvanNewman, CutsJson) {
  const std::vector<EdgeCut> cuts{{2, 3, 9.0}};
  EXPECT_EQ(cuts_to_json(cuts), "[[2,3,9.0]]");
}
