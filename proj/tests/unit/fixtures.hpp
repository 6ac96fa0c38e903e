#pragma once

#include <random>
#include <vector>

#include "commbench/graph.hpp"
#include "oracles.hpp"

namespace fixtures {

using commbench::Edge;
using commbench::Graph;
using commbench::NodeId;

inline Graph make(NodeId n, std::vector<Edge> edges) { return Graph::from_edges(n, edges); }

inline Graph complete(NodeId n, NodeId offset = 0, std::vector<Edge>* out = nullptr) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u + offset, v + offset});
  }
  if (out) out->insert(out->end(), edges.begin(), edges.end());
  return make(n + offset, edges);
}

inline Graph triangle() { return make(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline Graph star4() { return make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}); }
inline Graph path3() { return make(3, {{0, 1}, {1, 2}}); }

/// Two 5-cliques {0..4} and {5..9} joined by the bridge 4-5.
inline Graph two_cliques() {
  std::vector<Edge> edges;
  complete(5, 0, &edges);
  complete(5, 5, &edges);
  edges.push_back({4, 5});
  return make(10, edges);
}

/// Eight triangles in a ring, consecutive ones joined by a single edge.
inline Graph triangle_ring(int count = 8) {
  std::vector<Edge> edges;
  for (int t = 0; t < count; ++t) {
    const NodeId b = 3 * t;
    edges.push_back({b, b + 1});
    edges.push_back({b + 1, b + 2});
    edges.push_back({b, b + 2});
    const NodeId next = 3 * ((t + 1) % count);
    edges.push_back({std::min(b + 2, next), std::max(b + 2, next)});
  }
  return make(3 * count, edges);
}

inline Graph random_graph(NodeId n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return make(n, edges);
}

inline oracle::EdgeList edge_list(const Graph& g) {
  oracle::EdgeList out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

template <typename Labels>
std::vector<int> as_ints(const Labels& labels) {
  return std::vector<int>(labels.begin(), labels.end());
}

}  // namespace fixtures
