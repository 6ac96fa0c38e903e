#include "components.hpp"

#include <algorithm>
#include <string>

#include "commbench/error.hpp"

namespace commbench::detail {

ClusteringResult per_component(const Graph& g,
                               const std::function<ClusteringResult(const Graph&)>& run) {
  const NodeId n = g.node_count();
  const auto component = connected_components(g);
  std::vector<std::vector<NodeId>> groups(static_cast<std::size_t>(n));
  for (NodeId u = 0; u < n; ++u) groups[component[u]].push_back(u);
  const auto nonempty = std::count_if(groups.begin(), groups.end(),
                                      [](const auto& m) { return !m.empty(); });
  if (nonempty == 1 && n > 1) return run(g);

  std::vector<std::int32_t> labels(static_cast<std::size_t>(n), -1);
  std::int32_t next = 0;
  bool converged = true;
  for (const auto& nodes : groups) {
    if (nodes.empty()) continue;
    if (nodes.size() == 1) {
      labels[nodes[0]] = next++;
      continue;
    }
    ClusteringResult sub = run(g.induced(nodes));
    converged = converged && sub.converged;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      labels[nodes[i]] = next + sub.partition[static_cast<NodeId>(i)];
    }
    next += sub.partition.num_communities();
  }
  return {Partition(labels), converged};
}

void require_edges(const Graph& g, const char* algorithm) {
  if (g.edge_count() == 0) {
    throw DataError(std::string(algorithm) + " needs a graph with at least one edge");
  }
}

}  // namespace commbench::detail
