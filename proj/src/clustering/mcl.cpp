#include <Eigen/SparseCore>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "commbench/clustering.hpp"
#include "commbench/error.hpp"
#include "components.hpp"

namespace commbench {

namespace {

using FlowMatrix = Eigen::SparseMatrix<double>;  // column-major, columns sum to 1

void normalize_columns(FlowMatrix& m) {
  for (Eigen::Index j = 0; j < m.outerSize(); ++j) {
    double sum = 0.0;
    for (FlowMatrix::InnerIterator it(m, j); it; ++it) sum += it.value();
    if (sum > 0.0) {
      for (FlowMatrix::InnerIterator it(m, j); it; ++it) it.valueRef() /= sum;
    }
  }
}

FlowMatrix initial_flow(const Graph& g) {
  const NodeId n = g.node_count();
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(static_cast<std::size_t>(n + 2 * g.edge_count()));
  for (NodeId u = 0; u < n; ++u) {
    entries.emplace_back(u, u, 1.0);
    for (NodeId v : g.neighbors(u)) entries.emplace_back(v, u, 1.0);
  }
  FlowMatrix m(n, n);
  m.setFromTriplets(entries.begin(), entries.end());
  normalize_columns(m);
  return m;
}

double max_abs_change(const FlowMatrix& a, const FlowMatrix& b) {
  FlowMatrix diff = a - b;
  double worst = 0.0;
  for (Eigen::Index j = 0; j < diff.outerSize(); ++j) {
    for (FlowMatrix::InnerIterator it(diff, j); it; ++it) {
      worst = std::max(worst, std::abs(it.value()));
    }
  }
  return worst;
}

// Attractors are nodes with positive self-flow. Attractors flowing into each
// other form one system; every node joins the lowest-labelled system holding
// flow in its column.
std::vector<std::int32_t> read_clusters(const FlowMatrix& m) {
  const auto n = static_cast<std::int32_t>(m.cols());
  std::vector<std::int32_t> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::int32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  std::vector<bool> attractor(static_cast<std::size_t>(n), false);
  for (std::int32_t j = 0; j < n; ++j) {
    for (FlowMatrix::InnerIterator it(m, j); it; ++it) {
      if (it.row() == j && it.value() > 0.0) attractor[j] = true;
    }
  }
  for (std::int32_t j = 0; j < n; ++j) {
    if (!attractor[j]) continue;
    for (FlowMatrix::InnerIterator it(m, j); it; ++it) {
      const auto i = static_cast<std::int32_t>(it.row());
      if (attractor[i] && it.value() > 0.0) unite(i, j);
    }
  }

  std::vector<std::int32_t> label(static_cast<std::size_t>(n));
  for (std::int32_t j = 0; j < n; ++j) {
    std::int32_t best = -1;
    for (FlowMatrix::InnerIterator it(m, j); it; ++it) {
      const auto i = static_cast<std::int32_t>(it.row());
      if (attractor[i] && it.value() > 0.0) {
        const std::int32_t system = find(i);
        if (best < 0 || system < best) best = system;
      }
    }
    label[j] = best < 0 ? j : best;
  }
  return label;
}

ClusteringResult mcl_connected(const Graph& g, const MclOptions& options) {
  FlowMatrix flow = initial_flow(g);
  bool converged = false;
  for (int iter = 0; iter < options.max_iterations && !converged; ++iter) {
    FlowMatrix next = flow;
    // Plain product: Eigen 3.4.0's pruned product can overrun its buffer.
    for (int e = 1; e < options.expansion; ++e) {
      next = FlowMatrix(next * flow);
      next.prune([](Eigen::Index, Eigen::Index, double v) { return v != 0.0; });
    }
    for (Eigen::Index k = 0; k < next.nonZeros(); ++k) {
      next.valuePtr()[k] = std::pow(next.valuePtr()[k], options.inflation);
    }
    normalize_columns(next);
    const double threshold = options.prune_threshold;
    next.prune([threshold](Eigen::Index, Eigen::Index, double v) { return v >= threshold; });
    normalize_columns(next);
    converged = max_abs_change(next, flow) < options.tolerance;
    flow = std::move(next);
  }
  return {Partition(read_clusters(flow)), converged};
}

}  // namespace

ClusteringResult mcl(const Graph& g, const MclOptions& options) {
  if (!(options.inflation > 1.0)) throw ConfigError("MCL inflation must exceed 1");
  if (options.expansion < 2) throw ConfigError("MCL expansion must be >= 2");
  return detail::per_component(
      g, [&](const Graph& component) { return mcl_connected(component, options); });
}

}  // namespace commbench
