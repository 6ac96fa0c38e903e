#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace commbench {

/// Dense zero-based node index.
using NodeId = std::int32_t;

struct Edge {
  NodeId u;
  NodeId v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable undirected simple graph stored as sorted CSR adjacency.
///
/// Construction validates the input: endpoints must be in range, and
/// self-loops and repeated pairs are rejected with DataError.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(NodeId node_count, std::span<const Edge> edges);

  NodeId node_count() const { return node_count_; }
  std::int64_t edge_count() const {
    return static_cast<std::int64_t>(adjacency_.size()) / 2;
  }

  std::span<const NodeId> neighbors(NodeId u) const {
    return {adjacency_.data() + offsets_[u],
            static_cast<std::size_t>(offsets_[u + 1] - offsets_[u])};
  }
  std::int32_t degree(NodeId u) const {
    return static_cast<std::int32_t>(offsets_[u + 1] - offsets_[u]);
  }
  bool has_edge(NodeId u, NodeId v) const;

  std::vector<std::int32_t> degrees() const;
  /// Every edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;
  /// Subgraph induced by `nodes`; node i of the result is nodes[i].
  Graph induced(std::span<const NodeId> nodes) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  NodeId node_count_ = 0;
  std::vector<std::int64_t> offsets_{0};
  std::vector<NodeId> adjacency_;
};

inline Graph build_graph(NodeId node_count, std::span<const Edge> edges) {
  return Graph::from_edges(node_count, edges);
}

// Structural queries. All are pure functions of the graph.

/// Component label of every node: the smallest node id in its component.
std::vector<NodeId> connected_components(const Graph& g);

struct PathLengthOptions {
  std::size_t sample_sources = 1000;
  NodeId exact_threshold = 2000;
  std::uint64_t seed = 1;
};

struct PathLengthResult {
  double mean = 0.0;
  /// Share of (source, target) ordered pairs that were unreachable and so
  /// left out of the mean.
  double unreachable_fraction = 0.0;
  bool exact = true;
  std::size_t sources = 0;
};

/// Mean BFS distance over reachable ordered pairs. Exact when the graph has
/// at most `exact_threshold` nodes, otherwise averaged over BFS trees from
/// uniformly sampled distinct sources. Throws DataError("no paths") when no
/// pair is reachable.
PathLengthResult average_path_length(const Graph& g,
                                     const PathLengthOptions& options = {});

/// Average local clustering coefficient; nodes of degree < 2 count as 0.
double clustering_coefficient(const Graph& g);

struct CoreDecomposition {
  std::vector<std::int32_t> core;
  std::int32_t max_core = 0;
};

CoreDecomposition k_core_decomposition(const Graph& g);

}  // namespace commbench
