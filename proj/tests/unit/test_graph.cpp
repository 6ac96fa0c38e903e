#include <gtest/gtest.h>

#include <numeric>

#include "commbench/error.hpp"
#include "commbench/graph.hpp"
#include "fixtures.hpp"

using namespace commbench;
using namespace fixtures;

TEST(BuildGraph, Triangle) {
  Graph g = triangle();
  EXPECT_EQ(g.node_count(), 3);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_FALSE(path3().has_edge(0, 2));
}

TEST(BuildGraph, RejectsSelfLoop) {
  EXPECT_THROW(make(2, {{0, 0}}), DataError);
}

TEST(BuildGraph, RejectsDuplicate) {
  EXPECT_THROW(make(4, {{0, 1}, {0, 1}}), DataError);
  EXPECT_THROW(make(4, {{0, 1}, {1, 0}}), DataError);
}

TEST(BuildGraph, RejectsOutOfRange) {
  EXPECT_THROW(make(2, {{0, 2}}), DataError);
  EXPECT_THROW(make(2, {{-1, 1}}), DataError);
}

TEST(BuildGraph, SortedSymmetricAdjacency) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(30, 0.2, rng);
    std::int64_t degree_sum = 0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
      auto nb = g.neighbors(u);
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
      EXPECT_EQ(std::adjacent_find(nb.begin(), nb.end()), nb.end());
      for (NodeId v : nb) {
        EXPECT_NE(u, v);
        EXPECT_TRUE(g.has_edge(v, u));
      }
      degree_sum += g.degree(u);
    }
    EXPECT_EQ(degree_sum, 2 * g.edge_count());
  }
}

TEST(Components, Examples) {
  EXPECT_EQ(connected_components(triangle()), (std::vector<NodeId>{0, 0, 0}));
  EXPECT_EQ(connected_components(make(4, {{0, 1}, {2, 3}})), (std::vector<NodeId>{0, 0, 2, 2}));
  EXPECT_EQ(connected_components(make(3, {})), (std::vector<NodeId>{0, 1, 2}));
}

TEST(Components, IdempotentAndCovering) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(40, 0.04, rng);
    auto labels = connected_components(g);
    ASSERT_EQ(labels.size(), 40u);
    // Relabel to a graph of label-edges: components of each component stay put.
    for (NodeId u = 0; u < g.node_count(); ++u) {
      EXPECT_LE(labels[u], u);
      EXPECT_EQ(labels[labels[u]], labels[u]);
      for (NodeId v : g.neighbors(u)) EXPECT_EQ(labels[u], labels[v]);
    }
    std::vector<Edge> star;
    for (NodeId u = 0; u < g.node_count(); ++u) {
      if (labels[u] != u) star.push_back({labels[u], u});
    }
    EXPECT_EQ(connected_components(make(40, star)), labels);
  }
}

TEST(PathLength, Examples) {
  auto p = average_path_length(path3());
  EXPECT_NEAR(p.mean, 4.0 / 3.0, 1e-12);
  EXPECT_TRUE(p.exact);
  EXPECT_DOUBLE_EQ(average_path_length(complete(5)).mean, 1.0);
}

TEST(PathLength, NoPaths) {
  EXPECT_THROW(average_path_length(make(3, {})), DataError);
}

TEST(PathLength, ReportsUnreachableShare) {
  auto p = average_path_length(make(4, {{0, 1}, {2, 3}}));
  EXPECT_DOUBLE_EQ(p.mean, 1.0);
  EXPECT_NEAR(p.unreachable_fraction, 8.0 / 12.0, 1e-12);
}

TEST(PathLength, MatchesBfsOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_graph(60, 0.06, rng);
    if (g.edge_count() == 0) continue;
    EXPECT_NEAR(average_path_length(g).mean, oracle::mean_distance(60, edge_list(g)), 1e-12);
  }
}

TEST(PathLength, SamplingAllSourcesEqualsExact) {
  std::mt19937_64 rng(8);
  Graph g = random_graph(2000, 0.003, rng);
  const double exact = average_path_length(g).mean;
  PathLengthOptions sampled;
  sampled.exact_threshold = 10;
  sampled.sample_sources = 2000;
  auto p = average_path_length(g, sampled);
  EXPECT_FALSE(p.exact);
  EXPECT_NEAR(p.mean, exact, 0.05);
}

TEST(Clustering, Examples) {
  EXPECT_DOUBLE_EQ(clustering_coefficient(triangle()), 1.0);
  EXPECT_DOUBLE_EQ(clustering_coefficient(star4()), 0.0);
  Graph k4_minus = make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  EXPECT_NEAR(clustering_coefficient(k4_minus), 0.8333, 1e-4);
  EXPECT_NEAR(clustering_coefficient(k4_minus),
              oracle::average_clustering(4, edge_list(k4_minus)), 1e-12);
}

TEST(Clustering, MatchesTriadOracle) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(25, 0.25, rng);
    EXPECT_NEAR(clustering_coefficient(g), oracle::average_clustering(25, edge_list(g)), 1e-12);
  }
}

TEST(KCore, Examples) {
  auto t = k_core_decomposition(triangle());
  EXPECT_EQ(t.core, (std::vector<std::int32_t>{2, 2, 2}));
  EXPECT_EQ(t.max_core, 2);
  auto s = k_core_decomposition(star4());
  EXPECT_EQ(s.core, (std::vector<std::int32_t>(5, 1)));
  EXPECT_EQ(s.max_core, 1);
  EXPECT_EQ(k_core_decomposition(two_cliques()).max_core, 4);
}

TEST(KCore, MatchesPeelingOracle) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(30, 0.2, rng);
    auto expected = oracle::core_numbers(30, edge_list(g));
    auto got = k_core_decomposition(g);
    EXPECT_EQ(as_ints(got.core), expected);
    EXPECT_EQ(got.max_core, *std::max_element(expected.begin(), expected.end()));
  }
}

TEST(KCore, MonotoneUnderEdgeAddition) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(20, 0.2, rng);
    auto before = k_core_decomposition(g).core;
    auto edges = g.edges();
    std::uniform_int_distribution<NodeId> pick(0, 19);
    NodeId u, v;
    do {
      u = pick(rng);
      v = pick(rng);
    } while (u == v || g.has_edge(u, v));
    edges.push_back({u, v});
    auto after = k_core_decomposition(make(20, edges)).core;
    for (NodeId x = 0; x < 20; ++x) EXPECT_GE(after[x], before[x]);
  }
}

TEST(Graph, InducedSubgraph) {
  Graph g = two_cliques();
  std::vector<NodeId> nodes{3, 4, 5, 6};
  Graph h = g.induced(nodes);
  EXPECT_EQ(h.node_count(), 4);
  EXPECT_EQ(h.edge_count(), 3);  // 3-4, 4-5, 5-6
  EXPECT_TRUE(h.has_edge(1, 2));
}
