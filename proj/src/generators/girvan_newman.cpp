#include <string>

#include "commbench/error.hpp"
#include "commbench/generators.hpp"

namespace commbench {

GeneratedNetwork generate_gn(const GNConfig& cfg) {
  if (cfg.communities < 1 || cfg.n < cfg.communities || cfg.n % cfg.communities != 0) {
    throw ConfigError("GN node count must be a positive multiple of the community count");
  }
  if (!(cfg.mixing >= 0.0 && cfg.mixing <= 1.0)) throw ConfigError("GN mixing must lie in [0, 1]");

  const NodeId group = cfg.n / cfg.communities;
  const double p_in = group > 1 ? cfg.total_degree * (1.0 - cfg.mixing) / (group - 1) : 0.0;
  const double p_out =
      cfg.n > group ? cfg.total_degree * cfg.mixing / (cfg.n - group) : 0.0;
  if (!(p_in >= 0.0 && p_in <= 1.0) || !(p_out >= 0.0 && p_out <= 1.0)) {
    throw ConfigError("GN edge probabilities out of [0, 1]: p_in=" + std::to_string(p_in) +
                      ", p_out=" + std::to_string(p_out));
  }

  Rng rng = make_rng(cfg.seed);
  std::vector<Edge> edges;
  std::vector<std::int32_t> labels(static_cast<std::size_t>(cfg.n));
  for (NodeId u = 0; u < cfg.n; ++u) {
    labels[u] = u / group;
    for (NodeId v = u + 1; v < cfg.n; ++v) {
      const double p = (u / group == v / group) ? p_in : p_out;
      if (uniform_real(rng) < p) edges.push_back({u, v});
    }
  }

  GeneratedNetwork out;
  out.graph = build_graph(cfg.n, edges);
  out.ground_truth = Partition(labels, PartitionRole::ground_truth);
  out.config = cfg;
  return out;
}

}  // namespace commbench
