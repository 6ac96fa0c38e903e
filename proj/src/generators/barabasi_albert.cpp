#include <algorithm>
#include <cmath>
#include <string>

#include "commbench/error.hpp"
#include "commbench/generators.hpp"

namespace commbench {

Graph generate_ba(const BAConfig& cfg) {
  if (!(cfg.avg_degree >= 2.0)) throw ConfigError("BA average degree must be >= 2");
  const double half = cfg.avg_degree / 2.0;
  const int m_low = static_cast<int>(std::floor(half));
  const int m_high = static_cast<int>(std::ceil(half));
  const double p_high = half - m_low;
  const NodeId seed_size = m_high + 1;
  if (cfg.n <= seed_size) {
    throw ConfigError("BA needs more than " + std::to_string(seed_size) +
                      " nodes for average degree " + std::to_string(cfg.avg_degree));
  }

  Rng rng = make_rng(cfg.seed);
  std::bernoulli_distribution pick_high(p_high);

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(cfg.n) * m_high);
  // Every edge contributes both endpoints; a uniform draw from this list is a
  // degree-proportional draw over nodes.
  std::vector<NodeId> endpoints;
  endpoints.reserve(edges.capacity() * 2);

  for (NodeId u = 0; u < seed_size; ++u) {
    for (NodeId v = u + 1; v < seed_size; ++v) {
      edges.push_back({u, v});
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }

  std::vector<NodeId> targets;
  for (NodeId v = seed_size; v < cfg.n; ++v) {
    const int m = (p_high > 0.0 && pick_high(rng)) ? m_high : m_low;
    targets.clear();
    while (static_cast<int>(targets.size()) < m) {
      NodeId t = endpoints[uniform_index(rng, endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) {
        targets.push_back(t);
      }
    }
    for (NodeId t : targets) {
      edges.push_back({t, v});
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return build_graph(cfg.n, edges);
}

}  // namespace commbench
