#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "commbench/error.hpp"
#include "commbench/generators.hpp"
#include "edge_set.hpp"

namespace commbench {

namespace {

// Continuous power law on [lo, hi) with exponent tau; degrees are floor(X).
struct ContinuousPowerLaw {
  double tau, lo, hi;

  double cdf(double x) const {
    if (std::abs(tau - 1.0) < 1e-12) return std::log(x / lo) / std::log(hi / lo);
    const double e = 1.0 - tau;
    return (std::pow(x, e) - std::pow(lo, e)) / (std::pow(hi, e) - std::pow(lo, e));
  }
  double quantile(double u) const {
    if (std::abs(tau - 1.0) < 1e-12) return lo * std::pow(hi / lo, u);
    const double e = 1.0 - tau;
    const double a = std::pow(lo, e);
    return std::pow(a + u * (std::pow(hi, e) - a), 1.0 / e);
  }
  double mean_of_floor() const {
    double mean = 0.0;
    for (auto j = static_cast<std::int64_t>(std::floor(lo)); j < hi; ++j) {
      const double a = std::max(static_cast<double>(j), lo);
      const double b = std::min(static_cast<double>(j + 1), hi);
      if (b > a) mean += static_cast<double>(j) * (cdf(b) - cdf(a));
    }
    return mean;
  }
};

// Lower cutoff so that E[floor X] matches the target mean.
double tune_min_degree(double tau, std::int32_t max_degree, double target) {
  const double hi = max_degree + 1.0;
  auto mean_at = [&](double lo) { return ContinuousPowerLaw{tau, lo, hi}.mean_of_floor(); };
  if (mean_at(1.0) >= target) {
    if (mean_at(1.0) > 1.05 * target) {
      throw ConfigError("average degree " + std::to_string(target) +
                        " is below what the degree exponent allows");
    }
    return 1.0;
  }
  double lo = 1.0, hi_cut = max_degree;
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi_cut);
    (mean_at(mid) < target ? lo : hi_cut) = mid;
  }
  return 0.5 * (lo + hi_cut);
}

std::vector<std::int32_t> sample_degrees(const LFRConfig& cfg, std::int32_t max_degree,
                                         double min_degree, Rng& rng) {
  const ContinuousPowerLaw law{cfg.degree_exponent, min_degree, max_degree + 1.0};
  std::vector<std::int32_t> best;
  double best_gap = 0.0;
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<std::int32_t> deg(static_cast<std::size_t>(cfg.n));
    for (auto& d : deg) {
      d = std::min(max_degree, static_cast<std::int32_t>(law.quantile(uniform_real(rng))));
    }
    const double mean = std::accumulate(deg.begin(), deg.end(), 0.0) / cfg.n;
    const double gap = std::abs(mean - cfg.avg_degree) / cfg.avg_degree;
    if (best.empty() || gap < best_gap) {
      best = std::move(deg);
      best_gap = gap;
    }
    if (best_gap <= 0.05) break;
  }
  const std::int64_t sum = std::accumulate(best.begin(), best.end(), std::int64_t{0});
  if (sum % 2 != 0) {
    auto below_max = std::find_if(best.begin(), best.end(),
                                  [&](std::int32_t d) { return d < max_degree; });
    if (below_max == best.end()) {
      --best.front();
    } else {
      for (;;) {
        auto& d = best[uniform_index(rng, best.size())];
        if (d < max_degree) {
          ++d;
          break;
        }
      }
    }
  }
  return best;
}

// Configuration-model pairing of `stubs` with repair passes and
// degree-preserving rewiring for stubs that cannot be paired directly.
// Returns the stubs left unmatched.
std::vector<NodeId> wire(std::vector<NodeId> stubs, const std::function<bool(NodeId, NodeId)>& valid,
                  EdgeSet& present, std::vector<Edge>& pool, Rng& rng) {
  constexpr int kRepairPasses = 10;
  constexpr int kRewireTries = 50;

  auto try_add = [&](NodeId a, NodeId b) {
    if (a == b || !valid(a, b) || present.contains(a, b)) return false;
    present.insert(a, b);
    pool.push_back({a, b});
    return true;
  };

  for (int pass = 0; pass <= kRepairPasses && stubs.size() >= 2; ++pass) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<NodeId> leftover;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      if (!try_add(stubs[i], stubs[i + 1])) {
        leftover.push_back(stubs[i]);
        leftover.push_back(stubs[i + 1]);
      }
    }
    if (stubs.size() % 2 != 0) leftover.push_back(stubs.back());
    const bool progress = leftover.size() < stubs.size();
    stubs = std::move(leftover);
    if (!progress) break;
  }

  std::vector<NodeId> unmatched;
  if (stubs.size() % 2 != 0) unmatched.push_back(stubs.back());
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    const NodeId a = stubs[i];
    const NodeId b = stubs[i + 1];
    bool placed = false;
    for (int t = 0; t < kRewireTries && !pool.empty() && !placed; ++t) {
      const std::size_t idx = uniform_index(rng, pool.size());
      auto [x, y] = pool[idx];
      if (uniform_real(rng) < 0.5) std::swap(x, y);
      if (a == x || b == y || EdgeSet::key(a, x) == EdgeSet::key(b, y)) continue;
      if (!valid(a, x) || !valid(b, y)) continue;
      if (present.contains(a, x) || present.contains(b, y)) continue;
      present.erase(x, y);
      present.insert(a, x);
      present.insert(b, y);
      pool[idx] = {a, x};
      pool.push_back({b, y});
      placed = true;
    }
    if (!placed) {
      unmatched.push_back(a);
      unmatched.push_back(b);
    }
  }
  return unmatched;
}

}  // namespace

std::int32_t lfr_default_max_degree(const LFRConfig& cfg) {
  double cap = std::min(std::floor(cfg.n / 10.0), std::floor(3.0 * cfg.avg_degree * cfg.avg_degree));
  if (cfg.mixing < 1.0) {
    cap = std::min(cap, std::floor((cfg.min_community - 1) / (1.0 - cfg.mixing) + 1e-9));
  }
  return static_cast<std::int32_t>(cap);
}

GeneratedNetwork generate_lfr_like(const LFRConfig& cfg) {
  if (cfg.n < 2) throw ConfigError("LFR needs at least 2 nodes");
  if (!(cfg.mixing >= 0.0 && cfg.mixing <= 1.0)) throw ConfigError("LFR mixing must lie in [0, 1]");
  if (!(cfg.degree_exponent > 1.0)) throw ConfigError("LFR degree exponent must exceed 1");
  if (!(cfg.community_exponent >= 1.0)) throw ConfigError("LFR community exponent must be >= 1");
  if (cfg.min_community < 1 || cfg.min_community > cfg.max_community || cfg.max_community > cfg.n) {
    throw ConfigError("LFR community bounds must satisfy 1 <= cmin <= cmax <= n");
  }
  const std::int32_t max_degree = cfg.max_degree > 0 ? cfg.max_degree : lfr_default_max_degree(cfg);
  if (!(cfg.avg_degree <= max_degree) || !(cfg.avg_degree >= 1.0)) {
    throw ConfigError("LFR average degree must lie in [1, max degree=" +
                      std::to_string(max_degree) + "]");
  }
  if (static_cast<std::int32_t>(std::ceil((1.0 - cfg.mixing) * max_degree)) >= cfg.max_community) {
    throw ConfigError("LFR max internal degree does not fit the largest community");
  }

  Rng rng = make_rng(cfg.seed);
  LfrReport report;
  report.max_degree = max_degree;
  report.min_degree = tune_min_degree(cfg.degree_exponent, max_degree, cfg.avg_degree);
  const auto degree = sample_degrees(cfg, max_degree, report.min_degree, rng);
  const auto sizes = sample_community_sizes(cfg.n, cfg.min_community, cfg.max_community,
                                            cfg.community_exponent, rng);

  // Split each degree into internal and external stubs. Stochastic rounding
  // keeps the expected external share at mu for every degree.
  const std::size_t n = static_cast<std::size_t>(cfg.n);
  std::vector<std::int32_t> internal(n), external(n);
  for (std::size_t u = 0; u < n; ++u) {
    const double target = (1.0 - cfg.mixing) * degree[u];
    auto k_in = static_cast<std::int32_t>(std::floor(target));
    if (uniform_real(rng) < target - k_in) ++k_in;
    internal[u] = k_in;
    external[u] = degree[u] - k_in;
  }

  // Largest internal degrees first; feasible community sets are nested, so
  // this greedy succeeds whenever any assignment exists.
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return internal[a] > internal[b]; });
  std::vector<std::int32_t> by_size(sizes.size());
  std::iota(by_size.begin(), by_size.end(), 0);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [&](auto a, auto b) { return sizes[a] > sizes[b]; });
  std::vector<NodeId> free_slots(sizes.begin(), sizes.end());
  std::vector<std::int32_t> community(n, -1);
  std::vector<std::vector<NodeId>> members(sizes.size());
  for (NodeId u : order) {
    std::int64_t total = 0;
    std::size_t prefix = 0;
    while (prefix < by_size.size() && sizes[by_size[prefix]] > internal[u]) {
      total += free_slots[by_size[prefix]];
      ++prefix;
    }
    if (total == 0) {
      throw DataError("LFR infeasible: node with internal degree " +
                      std::to_string(internal[u]) + " fits no community");
    }
    std::int64_t pick = uniform_index(rng, total);
    for (std::size_t i = 0; i < prefix; ++i) {
      const auto c = by_size[i];
      if (pick < free_slots[c]) {
        community[u] = c;
        --free_slots[c];
        members[c].push_back(u);
        break;
      }
      pick -= free_slots[c];
    }
  }

  // Each community's internal stub total must be even.
  for (std::size_t c = 0; c < members.size(); ++c) {
    std::int64_t sum = 0;
    for (NodeId u : members[c]) sum += internal[u];
    if (sum % 2 == 0) continue;
    bool fixed = false;
    for (std::size_t t = 0; t < members[c].size() * 4 && !fixed; ++t) {
      const NodeId u = members[c][uniform_index(rng, members[c].size())];
      if (external[u] > 0 && internal[u] + 1 < sizes[c]) {
        ++internal[u];
        --external[u];
        fixed = true;
      }
    }
    // No external stub to borrow: grow or shrink one degree by one.
    for (NodeId u : members[c]) {
      if (fixed) break;
      if (internal[u] + 1 < sizes[c]) {
        ++internal[u];
        fixed = true;
      }
    }
    for (NodeId u : members[c]) {
      if (fixed) break;
      if (internal[u] > 0) {
        --internal[u];
        fixed = true;
      }
    }
  }

  EdgeSet present;
  present.reserve(std::accumulate(degree.begin(), degree.end(), std::size_t{0}));
  std::vector<Edge> edges;
  const std::int64_t total_stubs = std::accumulate(degree.begin(), degree.end(), std::int64_t{0});
  for (std::size_t c = 0; c < members.size(); ++c) {
    std::vector<NodeId> stubs;
    for (NodeId u : members[c]) stubs.insert(stubs.end(), internal[u], u);
    std::vector<Edge> pool;
    // A community's internal degrees need not be graphical (a hub may need
    // more distinct partners than its community offers). Stubs that stay
    // unmatched become external, so every degree is kept. With no mixing
    // they are dropped instead.
    const auto unmatched =
        wire(std::move(stubs), [](NodeId, NodeId) { return true; }, present, pool, rng);
    if (cfg.mixing > 0.0) {
      for (NodeId u : unmatched) {
        --internal[u];
        ++external[u];
        ++report.rerouted_stubs;
      }
    } else {
      report.dropped_stubs += static_cast<std::int64_t>(unmatched.size());
    }
    edges.insert(edges.end(), pool.begin(), pool.end());
  }
  {
    std::vector<NodeId> stubs;
    for (std::size_t u = 0; u < n; ++u) {
      stubs.insert(stubs.end(), external[u], static_cast<NodeId>(u));
    }
    std::vector<Edge> pool;
    report.dropped_stubs += static_cast<std::int64_t>(
        wire(std::move(stubs), [&](NodeId a, NodeId b) { return community[a] != community[b]; },
             present, pool, rng)
            .size());
    edges.insert(edges.end(), pool.begin(), pool.end());
  }
  if (report.dropped_stubs * 100 > total_stubs) {
    throw DataError("LFR stub matching left " + std::to_string(report.dropped_stubs) + " of " +
                    std::to_string(total_stubs) + " stubs unmatched after rewiring");
  }

  GeneratedNetwork out;
  out.graph = build_graph(cfg.n, edges);
  out.ground_truth = Partition(community, PartitionRole::ground_truth);
  out.config = cfg;
  out.lfr = report;
  return out;
}

}  // namespace commbench
