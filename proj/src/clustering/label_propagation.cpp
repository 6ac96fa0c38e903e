#include <algorithm>
#include <numeric>

#include "commbench/clustering.hpp"
#include "commbench/random.hpp"
#include "components.hpp"

namespace commbench {

namespace {

ClusteringResult propagate(const Graph& g, std::uint64_t seed, int max_sweeps) {
  const NodeId n = g.node_count();
  Rng rng = make_rng(seed);
  std::vector<std::int32_t> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  std::vector<NodeId> order(label.begin(), label.end());
  std::vector<std::int32_t> count(static_cast<std::size_t>(n), 0);
  std::vector<std::int32_t> seen, top;

  // Fills `top` with the most frequent neighbour labels of u.
  auto dominant = [&](NodeId u) {
    seen.clear();
    top.clear();
    std::int32_t best = 0;
    for (NodeId v : g.neighbors(u)) {
      const std::int32_t l = label[v];
      if (count[l]++ == 0) seen.push_back(l);
      best = std::max(best, count[l]);
    }
    for (std::int32_t l : seen) {
      if (count[l] == best) top.push_back(l);
      count[l] = 0;
    }
  };

  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    std::shuffle(order.begin(), order.end(), rng);
    for (NodeId u : order) {
      if (g.degree(u) == 0) continue;
      dominant(u);
      // A label already among the dominant ones is kept; otherwise ties are
      // broken uniformly at random.
      if (std::find(top.begin(), top.end(), label[u]) == top.end()) {
        std::sort(top.begin(), top.end());
        label[u] = top[uniform_index(rng, top.size())];
      }
    }
    converged = true;
    for (NodeId u = 0; u < n && converged; ++u) {
      if (g.degree(u) == 0) continue;
      dominant(u);
      converged = std::find(top.begin(), top.end(), label[u]) != top.end();
    }
  }
  return {Partition(label), converged};
}

}  // namespace

ClusteringResult label_propagation(const Graph& g, std::uint64_t seed, int max_sweeps) {
  return detail::per_component(
      g, [&](const Graph& component) { return propagate(component, seed, max_sweeps); });
}

}  // namespace commbench
