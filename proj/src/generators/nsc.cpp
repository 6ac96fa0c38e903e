#include <algorithm>
#include <numeric>
#include <sstream>

#include "commbench/error.hpp"
#include "commbench/generators.hpp"
#include "edge_set.hpp"

namespace commbench {

namespace {

constexpr double kEligible = 1.0;

std::size_t weighted_pick(Rng& rng, const std::vector<std::size_t>& candidates,
                          const std::vector<double>& weight) {
  double total = 0.0;
  for (auto c : candidates) total += weight[c];
  double u = uniform_real(rng) * total;
  for (auto c : candidates) {
    u -= weight[c];
    if (u < 0.0) return c;
  }
  return candidates.back();
}

}  // namespace

GeneratedNetwork generate_nsc(const NSCConfig& cfg) {
  const auto& sizes = cfg.community_sizes;
  if (sizes.empty()) throw ConfigError("NSC needs at least one community");
  if (!(cfg.mixing >= 0.0 && cfg.mixing <= 1.0)) {
    throw ConfigError("NSC mixing must lie in [0, 1]");
  }
  for (NodeId s : sizes) {
    if (!(s > cfg.avg_degree)) {
      throw ConfigError("NSC community size " + std::to_string(s) +
                        " must exceed the average degree");
    }
  }

  const std::size_t blocks = sizes.size();
  std::vector<NodeId> offset(blocks + 1, 0);
  for (std::size_t i = 0; i < blocks; ++i) offset[i + 1] = offset[i] + sizes[i];
  const NodeId n = offset.back();

  NscBudgetReport report;
  std::vector<Edge> edges;
  std::vector<std::int32_t> labels(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < blocks; ++i) {
    const std::uint64_t block_seed = derive_seed(cfg.seed, i);
    Graph block = generate_ba({sizes[i], cfg.avg_degree, block_seed});
    for (const Edge& e : block.edges()) {
      edges.push_back({e.u + offset[i], e.v + offset[i]});
    }
    std::fill(labels.begin() + offset[i], labels.begin() + offset[i + 1],
              static_cast<std::int32_t>(i));
    report.block_seeds.push_back(block_seed);
    report.initial.push_back(static_cast<double>(block.edge_count()) * cfg.mixing);
  }
  report.remaining = report.initial;
  auto& budget = report.remaining;

  Rng rng = make_rng(derive_seed(cfg.seed, "nsc-inter"));
  EdgeSet inter;
  std::vector<std::size_t> eligible;
  std::vector<std::size_t> partners;

  while (std::accumulate(budget.begin(), budget.end(), 0.0) > kEligible) {
    eligible.clear();
    for (std::size_t i = 0; i < blocks; ++i) {
      if (budget[i] > kEligible) eligible.push_back(i);
    }
    if (eligible.size() < 2) break;

    std::size_t c1;
    if (cfg.partner_rule == NscPartnerRule::min_budget_preferential) {
      c1 = *std::min_element(eligible.begin(), eligible.end(),
                             [&](auto a, auto b) { return budget[a] < budget[b]; });
    } else {
      c1 = eligible[uniform_index(rng, eligible.size())];
    }
    partners.clear();
    for (auto c : eligible) {
      if (c != c1) partners.push_back(c);
    }

    bool created = false;
    while (!created && !partners.empty()) {
      std::size_t c2 = cfg.partner_rule == NscPartnerRule::min_budget_preferential
                           ? weighted_pick(rng, partners, budget)
                           : partners[uniform_index(rng, partners.size())];
      for (int attempt = 0; attempt < cfg.pair_retries; ++attempt) {
        NodeId a = offset[c1] + uniform_index(rng, sizes[c1]);
        NodeId b = offset[c2] + uniform_index(rng, sizes[c2]);
        if (inter.insert(a, b)) {
          edges.push_back({a, b});
          budget[c1] -= 1.0;
          budget[c2] -= 1.0;
          ++report.inter_edges;
          created = true;
          break;
        }
      }
      if (!created) partners.erase(std::find(partners.begin(), partners.end(), c2));
    }
    if (!created) {
      const double initial = std::accumulate(report.initial.begin(), report.initial.end(), 0.0);
      const double left = std::accumulate(budget.begin(), budget.end(), 0.0);
      std::ostringstream msg;
      msg << "NSC could not place another inter-edge from community " << c1
          << " after retries; spent " << (initial - left) << " of " << initial
          << " budget units";
      throw DataError(msg.str());
    }
  }

  GeneratedNetwork out;
  out.graph = build_graph(n, edges);
  out.ground_truth = Partition(labels, PartitionRole::ground_truth);
  out.config = cfg;
  out.nsc = std::move(report);
  return out;
}

}  // namespace commbench
