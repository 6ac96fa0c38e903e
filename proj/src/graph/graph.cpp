#include "commbench/graph.hpp"

#include <algorithm>
#include <string>

#include "commbench/error.hpp"

namespace commbench {

Graph Graph::from_edges(NodeId node_count, std::span<const Edge> edges) {
  if (node_count < 0) throw ConfigError("negative node count");

  Graph g;
  g.node_count_ = node_count;
  g.offsets_.assign(static_cast<std::size_t>(node_count) + 1, 0);

  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= node_count || e.v >= node_count) {
      throw DataError("edge (" + std::to_string(e.u) + ", " +
                      std::to_string(e.v) + ") has an endpoint out of range [0, " +
                      std::to_string(node_count) + ")");
    }
    if (e.u == e.v) {
      throw DataError("self-loop on node " + std::to_string(e.u));
    }
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (NodeId u = 0; u < node_count; ++u) g.offsets_[u + 1] += g.offsets_[u];

  g.adjacency_.resize(static_cast<std::size_t>(g.offsets_.back()));
  std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.adjacency_[cursor[e.u]++] = e.v;
    g.adjacency_[cursor[e.v]++] = e.u;
  }

  for (NodeId u = 0; u < node_count; ++u) {
    auto first = g.adjacency_.begin() + g.offsets_[u];
    auto last = g.adjacency_.begin() + g.offsets_[u + 1];
    std::sort(first, last);
    auto dup = std::adjacent_find(first, last);
    if (dup != last) {
      throw DataError("duplicate edge (" + std::to_string(std::min(u, *dup)) +
                      ", " + std::to_string(std::max(u, *dup)) + ")");
    }
  }
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto a = neighbors(u);
  auto b = neighbors(v);
  if (b.size() < a.size()) return std::binary_search(b.begin(), b.end(), u);
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::int32_t> Graph::degrees() const {
  std::vector<std::int32_t> out(static_cast<std::size_t>(node_count_));
  for (NodeId u = 0; u < node_count_; ++u) out[u] = degree(u);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (NodeId u = 0; u < node_count_; ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::induced(std::span<const NodeId> nodes) const {
  std::vector<NodeId> local(static_cast<std::size_t>(node_count_), -1);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    local[nodes[i]] = static_cast<NodeId>(i);
  }
  std::vector<Edge> sub;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (NodeId v : neighbors(nodes[i])) {
      NodeId j = local[v];
      if (j > static_cast<NodeId>(i)) sub.push_back({static_cast<NodeId>(i), j});
    }
  }
  return from_edges(static_cast<NodeId>(nodes.size()), sub);
}

}  // namespace commbench
