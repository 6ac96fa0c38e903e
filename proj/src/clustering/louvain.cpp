#include <algorithm>
#include <numeric>

#include "commbench/clustering.hpp"
#include "commbench/random.hpp"
#include "components.hpp"

namespace commbench {

namespace {

// Weighted graph used between Louvain levels. Each undirected edge appears in
// both endpoint lists; `loop` holds self-loop weight.
struct LevelGraph {
  std::int32_t n = 0;
  std::vector<std::int64_t> offsets;
  std::vector<std::int32_t> targets;
  std::vector<double> weights;
  std::vector<double> loop;

  double strength(std::int32_t u) const {
    double s = 2.0 * loop[u];
    for (auto i = offsets[u]; i < offsets[u + 1]; ++i) s += weights[i];
    return s;
  }
};

LevelGraph from_graph(const Graph& g) {
  LevelGraph lg;
  lg.n = g.node_count();
  lg.offsets.assign(static_cast<std::size_t>(lg.n) + 1, 0);
  for (NodeId u = 0; u < lg.n; ++u) {
    lg.offsets[u + 1] = lg.offsets[u] + g.degree(u);
    for (NodeId v : g.neighbors(u)) lg.targets.push_back(v);
  }
  lg.weights.assign(lg.targets.size(), 1.0);
  lg.loop.assign(static_cast<std::size_t>(lg.n), 0.0);
  return lg;
}

LevelGraph aggregate(const LevelGraph& lg, const std::vector<std::int32_t>& community,
                     std::int32_t count) {
  LevelGraph out;
  out.n = count;
  out.loop.assign(static_cast<std::size_t>(count), 0.0);
  std::vector<std::vector<std::int32_t>> members(static_cast<std::size_t>(count));
  for (std::int32_t u = 0; u < lg.n; ++u) members[community[u]].push_back(u);

  std::vector<double> acc(static_cast<std::size_t>(count), 0.0);
  std::vector<std::int32_t> touched;
  out.offsets.push_back(0);
  for (std::int32_t c = 0; c < count; ++c) {
    touched.clear();
    for (std::int32_t u : members[c]) {
      out.loop[c] += lg.loop[u];
      for (auto i = lg.offsets[u]; i < lg.offsets[u + 1]; ++i) {
        const std::int32_t d = community[lg.targets[i]];
        if (d == c) {
          out.loop[c] += 0.5 * lg.weights[i];  // seen from both endpoints
          continue;
        }
        if (acc[d] == 0.0) touched.push_back(d);
        acc[d] += lg.weights[i];
      }
    }
    std::sort(touched.begin(), touched.end());
    for (std::int32_t d : touched) {
      out.targets.push_back(d);
      out.weights.push_back(acc[d]);
      acc[d] = 0.0;
    }
    out.offsets.push_back(static_cast<std::int64_t>(out.targets.size()));
  }
  return out;
}

// One level of local moving. Returns true if any node changed community.
bool local_moves(const LevelGraph& lg, std::vector<std::int32_t>& community, Rng& rng,
                 const LouvainOptions& options, bool& converged) {
  const std::int32_t n = lg.n;
  std::vector<double> strength(static_cast<std::size_t>(n));
  double total = 0.0;
  for (std::int32_t u = 0; u < n; ++u) {
    strength[u] = lg.strength(u);
    total += strength[u];
  }
  std::vector<double> community_strength(strength);
  std::iota(community.begin(), community.end(), 0);

  std::vector<std::int32_t> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> link(static_cast<std::size_t>(n), -1.0);
  std::vector<std::int32_t> seen;

  bool moved_any = false;
  converged = false;
  for (int pass = 0; pass < options.max_passes; ++pass) {
    std::shuffle(order.begin(), order.end(), rng);
    double improvement = 0.0;
    for (std::int32_t u : order) {
      const std::int32_t home = community[u];
      seen.clear();
      link[home] = 0.0;
      seen.push_back(home);
      for (auto i = lg.offsets[u]; i < lg.offsets[u + 1]; ++i) {
        const std::int32_t c = community[lg.targets[i]];
        if (link[c] < 0.0) {
          link[c] = 0.0;
          seen.push_back(c);
        }
        link[c] += lg.weights[i];
      }
      community_strength[home] -= strength[u];

      // Proportional to the modularity gain of inserting u into c.
      auto score = [&](std::int32_t c) {
        return link[c] - community_strength[c] * strength[u] / total;
      };
      std::int32_t best = home;
      double best_score = score(home);
      for (std::int32_t c : seen) {
        const double s = score(c);
        if (s > best_score) {
          best = c;
          best_score = s;
        }
      }
      improvement += 2.0 * (best_score - score(home)) / total;
      community_strength[best] += strength[u];
      if (best != home) {
        community[u] = best;
        moved_any = true;
      }
      for (std::int32_t c : seen) link[c] = -1.0;
    }
    if (improvement <= options.min_improvement) {
      converged = true;
      break;
    }
  }
  return moved_any;
}

ClusteringResult louvain_graph(const Graph& g, std::uint64_t seed,
                                   const LouvainOptions& options) {
  Rng rng = make_rng(seed);
  LevelGraph level = from_graph(g);
  std::vector<std::int32_t> assignment(static_cast<std::size_t>(g.node_count()));
  std::iota(assignment.begin(), assignment.end(), 0);
  bool converged_all = true;

  for (;;) {
    std::vector<std::int32_t> community(static_cast<std::size_t>(level.n));
    bool converged = true;
    const bool moved = local_moves(level, community, rng, options, converged);
    converged_all = converged_all && converged;
    if (!moved) break;

    // Renumber densely and project onto the original nodes.
    std::vector<std::int32_t> dense(static_cast<std::size_t>(level.n), -1);
    std::int32_t count = 0;
    for (auto& c : community) {
      if (dense[c] < 0) dense[c] = count++;
      c = dense[c];
    }
    for (auto& a : assignment) a = community[a];
    if (count == level.n) break;
    level = aggregate(level, community, count);
  }
  return {Partition(assignment), converged_all};
}

}  // namespace

ClusteringResult louvain(const Graph& g, std::uint64_t seed, const LouvainOptions& options) {
  detail::require_edges(g, "louvain");
  return louvain_graph(g, seed, options);
}

}  // namespace commbench
