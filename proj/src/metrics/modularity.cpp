#include <vector>

#include "commbench/error.hpp"
#include "commbench/metrics.hpp"

namespace commbench {

double modularity(const Graph& g, const Partition& p) {
  if (p.size() != g.node_count()) throw DataError("partition does not label every node");
  if (g.edge_count() == 0) throw DataError("modularity is undefined on an edgeless graph");

  const double m = static_cast<double>(g.edge_count());
  std::vector<std::int64_t> internal(static_cast<std::size_t>(p.num_communities()), 0);
  std::vector<std::int64_t> degree(internal.size(), 0);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    degree[p[u]] += g.degree(u);
    for (NodeId v : g.neighbors(u)) {
      if (u < v && p[u] == p[v]) ++internal[p[u]];
    }
  }
  double q = 0.0;
  for (std::size_t c = 0; c < internal.size(); ++c) {
    const double share = static_cast<double>(degree[c]) / (2.0 * m);
    q += static_cast<double>(internal[c]) / m - share * share;
  }
  return q;
}

}  // namespace commbench
