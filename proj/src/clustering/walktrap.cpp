#include <Eigen/SparseCore>
#include <algorithm>
#include <cmath>
#include <map>
#include <queue>

#include "commbench/clustering.hpp"
#include "commbench/error.hpp"
#include "components.hpp"

namespace commbench {

namespace {

using ProbabilityVector = Eigen::SparseVector<double>;

// Stored walk entries allowed before giving up (about 2 GB).
constexpr std::int64_t kMaxWalkEntries = 160'000'000;

// D^{-1/2} P^t e_u on the graph with a unit self-loop at every node, so that
// the walktrap distance between two rows is their Euclidean distance.
std::vector<ProbabilityVector> walk_rows(const Graph& g, int walk_length) {
  const NodeId n = g.node_count();
  std::vector<double> current(static_cast<std::size_t>(n), 0.0), next(current);
  std::vector<NodeId> support, next_support;
  std::vector<ProbabilityVector> rows;
  rows.reserve(static_cast<std::size_t>(n));
  std::int64_t stored = 0;

  for (NodeId source = 0; source < n; ++source) {
    support.assign(1, source);
    current[source] = 1.0;
    for (int step = 0; step < walk_length; ++step) {
      next_support.clear();
      for (NodeId j : support) {
        const double share = current[j] / (g.degree(j) + 1.0);
        current[j] = 0.0;
        auto spread = [&](NodeId k) {
          if (next[k] == 0.0) next_support.push_back(k);
          next[k] += share;
        };
        spread(j);
        for (NodeId k : g.neighbors(j)) spread(k);
      }
      std::swap(current, next);
      std::swap(support, next_support);
    }
    stored += static_cast<std::int64_t>(support.size());
    if (stored > kMaxWalkEntries) {
      throw DataError("walktrap: walk vectors exceed the memory budget (" +
                      std::to_string(n) + " nodes, walk length " + std::to_string(walk_length) +
                      ")");
    }
    std::sort(support.begin(), support.end());
    ProbabilityVector row(n);
    row.reserve(static_cast<Eigen::Index>(support.size()));
    for (NodeId k : support) {
      row.insertBack(k) = current[k] / std::sqrt(g.degree(k) + 1.0);
      current[k] = 0.0;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

struct Link {
  double delta_sigma;
  std::int64_t weight;
};

struct Walk {
  ProbabilityVector v;
  double norm2 = 0.0;
};

// Dense copy of one walk, so that distances against it cost one pass over
// the other walk's support.
class Scatter {
 public:
  explicit Scatter(NodeId n) : values_(Eigen::VectorXd::Zero(n)) {}

  void load(const Walk& w) {
    clear();
    loaded_ = &w;
    for (ProbabilityVector::InnerIterator it(w.v); it; ++it) values_[it.index()] = it.value();
  }
  void clear() {
    if (loaded_ == nullptr) return;
    for (ProbabilityVector::InnerIterator it(loaded_->v); it; ++it) values_[it.index()] = 0.0;
    loaded_ = nullptr;
  }
  double squared_distance(const Walk& other) const {
    double dot = 0.0;
    for (ProbabilityVector::InnerIterator it(other.v); it; ++it) {
      dot += it.value() * values_[it.index()];
    }
    return std::max(0.0, loaded_->norm2 + other.norm2 - 2.0 * dot);
  }

 private:
  Eigen::VectorXd values_;
  const Walk* loaded_ = nullptr;
};

struct Community {
  std::int32_t size = 1;
  std::int64_t degree_sum = 0;
  Walk walk;
  std::map<std::int32_t, Link> links;
  bool alive = false;
};

struct Candidate {
  double delta_sigma;
  std::int32_t a, b;
};

// Smallest delta-sigma first; ties go to the smallest (a, b).
struct CandidateOrder {
  bool operator()(const Candidate& x, const Candidate& y) const {
    if (x.delta_sigma != y.delta_sigma) return x.delta_sigma > y.delta_sigma;
    if (x.a != y.a) return x.a > y.a;
    return x.b > y.b;
  }
};

}  // namespace

Dendrogram walktrap_dendrogram(const Graph& g, int walk_length) {
  if (walk_length < 1) throw ConfigError("walktrap walk length must be >= 1");
  detail::require_edges(g, "walktrap");
  const NodeId n = g.node_count();
  const double m = static_cast<double>(g.edge_count());

  std::vector<Community> community(2 * static_cast<std::size_t>(n));
  auto rows = walk_rows(g, walk_length);
  Dendrogram out;
  out.node_count = n;
  for (NodeId u = 0; u < n; ++u) {
    auto& c = community[u];
    c.alive = true;
    c.degree_sum = g.degree(u);
    c.walk.norm2 = rows[u].squaredNorm();
    c.walk.v = std::move(rows[u]);
    const double share = c.degree_sum / (2.0 * m);
    out.initial_quality -= share * share;
  }

  std::vector<std::vector<NodeId>> members(community.size());
  for (NodeId u = 0; u < n; ++u) members[u].assign(1, u);

  // <P_C, r_y> for every node y at once: r_y = D^{-1/2} P^t e_y, so the
  // vector of dot products is P^t D^{-1/2} P_C. Cheaper than one sparse
  // dot per neighbour when a big community has many of them.
  Eigen::VectorXd spread = Eigen::VectorXd::Zero(n), spread_next(n);
  auto dots_by_node = [&](const Walk& w) {
    spread.setZero();
    for (ProbabilityVector::InnerIterator it(w.v); it; ++it) {
      spread[it.index()] = it.value() / std::sqrt(g.degree(static_cast<NodeId>(it.index())) + 1.0);
    }
    for (int step = 0; step < walk_length; ++step) {
      for (NodeId y = 0; y < n; ++y) {
        double sum = spread[y];
        for (NodeId k : g.neighbors(y)) sum += spread[k];
        spread_next[y] = sum / (g.degree(y) + 1.0);
      }
      std::swap(spread, spread_next);
    }
  };
  const std::int64_t propagation_cost =
      static_cast<std::int64_t>(walk_length) * (n + 2 * g.edge_count());

  // `a` must be the walk currently held by `scatter`.
  Scatter scatter(n);
  auto direct = [&](std::int32_t a, std::int32_t b) {
    const double sa = community[a].size, sb = community[b].size;
    return sa * sb / (sa + sb) * scatter.squared_distance(community[b].walk) / n;
  };

  std::priority_queue<Candidate, std::vector<Candidate>, CandidateOrder> heap;
  for (NodeId u = 0; u < n; ++u) {
    scatter.load(community[u].walk);
    for (NodeId v : g.neighbors(u)) {
      if (v < u) continue;
      const double ds = direct(u, v);
      community[u].links[v] = {ds, 1};
      community[v].links[u] = {ds, 1};
      heap.push({ds, u, v});
    }
  }
  scatter.clear();

  double quality = out.initial_quality;
  std::int32_t next_id = n;
  while (!heap.empty()) {
    const Candidate top = heap.top();
    heap.pop();
    if (!community[top.a].alive || !community[top.b].alive) continue;

    auto& ca = community[top.a];
    auto& cb = community[top.b];
    const std::int32_t id = next_id++;
    auto& merged = community[id];
    merged.alive = true;
    merged.size = ca.size + cb.size;
    merged.degree_sum = ca.degree_sum + cb.degree_sum;
    merged.walk.v = (static_cast<double>(ca.size) * ca.walk.v +
                     static_cast<double>(cb.size) * cb.walk.v) / static_cast<double>(merged.size);
    merged.walk.norm2 = merged.walk.v.squaredNorm();
    {
      auto& big = members[top.a].size() >= members[top.b].size() ? members[top.a] : members[top.b];
      auto& small = &big == &members[top.a] ? members[top.b] : members[top.a];
      members[id] = std::move(big);
      members[id].insert(members[id].end(), small.begin(), small.end());
      small = {};
    }

    const Link between = ca.links.at(top.b);
    quality += between.weight / m - static_cast<double>(ca.degree_sum) *
                                        static_cast<double>(cb.degree_sum) / (2.0 * m * m);
    out.merges.push_back({top.a, top.b, quality});

    ca.alive = false;
    cb.alive = false;
    std::map<std::int32_t, std::pair<std::optional<Link>, std::optional<Link>>> around;
    for (const auto& [x, link] : ca.links) {
      if (x != top.b) around[x].first = link;
    }
    for (const auto& [x, link] : cb.links) {
      if (x != top.a) around[x].second = link;
    }
    std::int64_t scatter_cost = 0, gather_cost = propagation_cost;
    for (const auto& [x, pair] : around) {
      if (!pair.first || !pair.second) {
        scatter_cost += community[x].walk.v.nonZeros();
        gather_cost += static_cast<std::int64_t>(members[x].size());
      }
    }
    const bool gather = gather_cost < scatter_cost;
    if (gather) {
      dots_by_node(merged.walk);
    } else {
      scatter.load(merged.walk);
    }

    for (const auto& [x, pair] : around) {
      const auto& [from_a, from_b] = pair;
      const double sx = community[x].size;
      Link link{0.0, (from_a ? from_a->weight : 0) + (from_b ? from_b->weight : 0)};
      if (from_a && from_b) {
        link.delta_sigma = ((ca.size + sx) * from_a->delta_sigma +
                            (cb.size + sx) * from_b->delta_sigma -
                            sx * between.delta_sigma) / (ca.size + cb.size + sx);
      } else if (gather) {
        double dot = 0.0;
        for (NodeId y : members[x]) dot += spread[y];
        dot /= sx;
        const double r2 = std::max(0.0, merged.walk.norm2 + community[x].walk.norm2 - 2.0 * dot);
        link.delta_sigma = merged.size * sx / (merged.size + sx) * r2 / n;
      } else {
        link.delta_sigma = direct(id, x);
      }
      auto& xl = community[x].links;
      xl.erase(top.a);
      xl.erase(top.b);
      xl[id] = link;
      merged.links[x] = link;
      heap.push({link.delta_sigma, std::min(id, x), std::max(id, x)});
    }
    ca.links.clear();
    cb.links.clear();
    scatter.clear();
    ca.walk = Walk();
    cb.walk = Walk();
  }
  return out;
}

ClusteringResult walktrap(const Graph& g, int walk_length) {
  if (walk_length < 1) throw ConfigError("walktrap walk length must be >= 1");
  Dendrogram d = walktrap_dendrogram(g, walk_length);
  return {d.cut(d.best_cut()), true};
}

}  // namespace commbench
