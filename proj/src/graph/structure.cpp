#include <algorithm>
#include <numeric>
#include <queue>

#include "commbench/error.hpp"
#include "commbench/graph.hpp"
#include "commbench/random.hpp"

namespace commbench {

std::vector<NodeId> connected_components(const Graph& g) {
  const NodeId n = g.node_count();
  std::vector<NodeId> label(static_cast<std::size_t>(n), -1);
  std::vector<NodeId> stack;
  // Scanning roots in increasing id order makes each root the minimum of
  // its component.
  for (NodeId root = 0; root < n; ++root) {
    if (label[root] >= 0) continue;
    label[root] = root;
    stack.push_back(root);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : g.neighbors(u)) {
        if (label[v] < 0) {
          label[v] = root;
          stack.push_back(v);
        }
      }
    }
  }
  return label;
}

namespace {

struct BfsTotals {
  std::int64_t distance_sum = 0;
  std::int64_t reached = 0;
};

BfsTotals bfs_from(const Graph& g, NodeId source, std::vector<std::int32_t>& dist,
                   std::vector<NodeId>& queue) {
  BfsTotals totals;
  queue.clear();
  queue.push_back(source);
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    NodeId u = queue[head];
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        totals.distance_sum += dist[v];
        ++totals.reached;
        queue.push_back(v);
      }
    }
  }
  for (NodeId u : queue) dist[u] = -1;
  return totals;
}

}  // namespace

PathLengthResult average_path_length(const Graph& g,
                                     const PathLengthOptions& options) {
  const NodeId n = g.node_count();
  if (n < 2) throw ConfigError("average path length needs at least 2 nodes");

  std::vector<NodeId> sources(static_cast<std::size_t>(n));
  std::iota(sources.begin(), sources.end(), 0);
  PathLengthResult result;
  result.exact = n <= options.exact_threshold;
  if (!result.exact && options.sample_sources < sources.size()) {
    // Partial Fisher-Yates: the first k slots are a uniform k-subset.
    Rng rng = make_rng(options.seed);
    for (std::size_t i = 0; i < options.sample_sources; ++i) {
      std::size_t j = i + uniform_index(rng, sources.size() - i);
      std::swap(sources[i], sources[j]);
    }
    sources.resize(options.sample_sources);
  }
  result.sources = sources.size();

  std::vector<std::int32_t> dist(static_cast<std::size_t>(n), -1);
  std::vector<NodeId> queue;
  queue.reserve(static_cast<std::size_t>(n));
  BfsTotals total;
  for (NodeId s : sources) {
    BfsTotals t = bfs_from(g, s, dist, queue);
    total.distance_sum += t.distance_sum;
    total.reached += t.reached;
  }
  if (total.reached == 0) throw DataError("no paths");

  const double pairs = static_cast<double>(sources.size()) * (n - 1);
  result.mean = static_cast<double>(total.distance_sum) / total.reached;
  result.unreachable_fraction = (pairs - total.reached) / pairs;
  return result;
}

double clustering_coefficient(const Graph& g) {
  const NodeId n = g.node_count();
  if (n == 0) return 0.0;
  std::vector<char> mark(static_cast<std::size_t>(n), 0);
  double sum = 0.0;
  for (NodeId u = 0; u < n; ++u) {
    const std::int64_t d = g.degree(u);
    if (d < 2) continue;
    auto nbrs = g.neighbors(u);
    for (NodeId v : nbrs) mark[v] = 1;
    std::int64_t links = 0;
    for (NodeId v : nbrs) {
      for (NodeId w : g.neighbors(v)) links += mark[w];
    }
    for (NodeId v : nbrs) mark[v] = 0;
    // Each link between two neighbours was seen from both ends.
    sum += static_cast<double>(links) / static_cast<double>(d * (d - 1));
  }
  return sum / n;
}

CoreDecomposition k_core_decomposition(const Graph& g) {
  // Bucket peeling (Batagelj & Zaversnik), O(n + m).
  const NodeId n = g.node_count();
  CoreDecomposition out;
  out.core = g.degrees();
  if (n == 0) return out;

  const std::int32_t max_degree = *std::max_element(out.core.begin(), out.core.end());
  std::vector<NodeId> bin(static_cast<std::size_t>(max_degree) + 1, 0);
  for (auto d : out.core) ++bin[d];
  NodeId start = 0;
  for (auto& b : bin) {
    NodeId count = b;
    b = start;
    start += count;
  }
  std::vector<NodeId> order(static_cast<std::size_t>(n));
  std::vector<NodeId> pos(static_cast<std::size_t>(n));
  for (NodeId u = 0; u < n; ++u) {
    pos[u] = bin[out.core[u]]++;
    order[pos[u]] = u;
  }
  for (std::int32_t d = max_degree; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  auto& deg = out.core;
  for (NodeId i = 0; i < n; ++i) {
    NodeId u = order[i];
    for (NodeId v : g.neighbors(u)) {
      if (deg[v] > deg[u]) {
        // Move v to the front of its bucket, then shrink it by one.
        NodeId front = bin[deg[v]];
        NodeId w = order[front];
        if (w != v) {
          std::swap(order[pos[v]], order[front]);
          std::swap(pos[v], pos[w]);
        }
        ++bin[deg[v]];
        --deg[v];
      }
    }
  }
  out.max_core = *std::max_element(deg.begin(), deg.end());
  return out;
}

}  // namespace commbench
