#include <numeric>
#include <queue>
#include <unordered_map>

#include "commbench/clustering.hpp"
#include "components.hpp"

namespace commbench {

std::size_t Dendrogram::best_cut() const {
  std::size_t best = 0;
  double best_q = initial_quality;
  for (std::size_t i = 0; i < merges.size(); ++i) {
    if (merges[i].quality > best_q) {
      best_q = merges[i].quality;
      best = i + 1;
    }
  }
  return best;
}

Partition Dendrogram::cut(std::size_t merge_count) const {
  const std::size_t total = static_cast<std::size_t>(node_count) + merges.size();
  std::vector<std::int32_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < merge_count && i < merges.size(); ++i) {
    const auto id = static_cast<std::int32_t>(node_count + i);
    parent[merges[i].a] = id;
    parent[merges[i].b] = id;
  }
  std::vector<std::int32_t> labels(static_cast<std::size_t>(node_count));
  for (NodeId u = 0; u < node_count; ++u) {
    std::int32_t r = u;
    while (parent[r] != r) r = parent[r];
    labels[u] = r;
  }
  return Partition(labels);
}

namespace {

struct Candidate {
  double gain;
  std::int32_t a, b;  // a < b, current community slots
  std::uint32_t version_a, version_b;
};

// Highest gain first; equal gains go to the smallest (a, b).
struct CandidateOrder {
  bool operator()(const Candidate& x, const Candidate& y) const {
    if (x.gain != y.gain) return x.gain < y.gain;
    if (x.a != y.a) return x.a > y.a;
    return x.b > y.b;
  }
};

}  // namespace

Dendrogram cnm_dendrogram(const Graph& g) {
  detail::require_edges(g, "cnm");
  const NodeId n = g.node_count();
  const double m = static_cast<double>(g.edge_count());

  // Community slot i starts as node i; a merge keeps the slot with the larger
  // neighbour table. Gains come from integer counts, so ties are exact.
  std::vector<std::unordered_map<std::int32_t, std::int64_t>> links(static_cast<std::size_t>(n));
  std::vector<std::int64_t> degree_sum(static_cast<std::size_t>(n));
  std::vector<std::uint32_t> version(static_cast<std::size_t>(n), 0);
  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  std::vector<std::int32_t> cluster_id(static_cast<std::size_t>(n));
  std::iota(cluster_id.begin(), cluster_id.end(), 0);

  auto gain = [&](std::int32_t a, std::int32_t b, std::int64_t w) {
    return static_cast<double>(w) / m -
           static_cast<double>(degree_sum[a]) * static_cast<double>(degree_sum[b]) / (2.0 * m * m);
  };

  Dendrogram out;
  out.node_count = n;
  for (NodeId u = 0; u < n; ++u) {
    degree_sum[u] = g.degree(u);
    for (NodeId v : g.neighbors(u)) links[u][v] = 1;
    const double share = static_cast<double>(degree_sum[u]) / (2.0 * m);
    out.initial_quality -= share * share;
  }

  std::priority_queue<Candidate, std::vector<Candidate>, CandidateOrder> heap;
  auto push = [&](std::int32_t a, std::int32_t b, std::int64_t w) {
    if (a > b) std::swap(a, b);
    heap.push({gain(a, b, w), a, b, version[a], version[b]});
  };
  for (const Edge& e : g.edges()) push(e.u, e.v, 1);

  double quality = out.initial_quality;
  while (!heap.empty()) {
    const Candidate top = heap.top();
    heap.pop();
    if (!alive[top.a] || !alive[top.b] || version[top.a] != top.version_a ||
        version[top.b] != top.version_b) {
      continue;
    }
    std::int32_t keep = top.a, gone = top.b;
    if (links[gone].size() > links[keep].size()) std::swap(keep, gone);

    quality += top.gain;
    out.merges.push_back({cluster_id[top.a], cluster_id[top.b], quality});
    cluster_id[keep] = static_cast<std::int32_t>(n + out.merges.size() - 1);

    links[keep].erase(gone);
    for (const auto& [other, w] : links[gone]) {
      if (other == keep) continue;
      links[keep][other] += w;
      auto& back = links[other];
      back.erase(gone);
      back[keep] += w;
    }
    links[gone].clear();
    alive[gone] = false;
    degree_sum[keep] += degree_sum[gone];
    ++version[keep];
    for (const auto& [other, w] : links[keep]) push(keep, other, w);
  }
  return out;
}

ClusteringResult fastgreedy_cnm(const Graph& g) {
  // Whole graph at once: merges never cross components, and the cut then
  // maximizes the modularity of the full graph.
  Dendrogram d = cnm_dendrogram(g);
  return {d.cut(d.best_cut()), true};
}

}  // namespace commbench
