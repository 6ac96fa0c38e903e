#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "commbench/graph.hpp"
#include "commbench/partition.hpp"
#include "commbench/random.hpp"

namespace commbench {

struct BAConfig {
  NodeId n = 0;
  double avg_degree = 2.0;
  std::uint64_t seed = 1;
};

/// Which community receives the next inter-edge endpoint pair.
enum class NscPartnerRule {
  /// c1 is the eligible community with the smallest remaining budget; c2 is
  /// drawn proportionally to remaining budget.
  min_budget_preferential,
  /// c1 and c2 drawn uniformly among eligible communities.
  uniform,
};

struct NSCConfig {
  std::vector<NodeId> community_sizes;
  double avg_degree = 2.0;
  double mixing = 0.0;
  std::uint64_t seed = 1;
  NscPartnerRule partner_rule = NscPartnerRule::min_budget_preferential;
  int pair_retries = 100;
};

/// Inter-edge budget ledger of one NSC generation.
struct NscBudgetReport {
  std::vector<std::uint64_t> block_seeds;
  std::vector<double> initial;    // |E(G_i)| * mu
  std::vector<double> remaining;  // after the loop stops
  std::int64_t inter_edges = 0;
};

struct LFRConfig {
  NodeId n = 1000;
  double avg_degree = 10.0;
  /// 0 selects the default cap (see generate_lfr_like).
  std::int32_t max_degree = 0;
  double degree_exponent = 2.0;
  double community_exponent = 1.0;
  double mixing = 0.2;
  NodeId min_community = 20;
  NodeId max_community = 50;
  std::uint64_t seed = 1;
};

struct GNConfig {
  NodeId n = 128;
  std::int32_t communities = 4;
  double total_degree = 16.0;
  double mixing = 0.0;
  std::uint64_t seed = 1;
};

struct LfrReport {
  std::int32_t max_degree = 0;
  double min_degree = 0.0;  // tuned continuous lower cutoff
  std::int64_t rerouted_stubs = 0;  // internal stubs wired as external
  std::int64_t dropped_stubs = 0;
};

struct GeneratedNetwork {
  Graph graph;
  Partition ground_truth;
  std::variant<NSCConfig, LFRConfig, GNConfig> config;
  std::optional<NscBudgetReport> nsc;
  std::optional<LfrReport> lfr;
};

Graph generate_ba(const BAConfig& cfg);
GeneratedNetwork generate_nsc(const NSCConfig& cfg);
GeneratedNetwork generate_lfr_like(const LFRConfig& cfg);
GeneratedNetwork generate_gn(const GNConfig& cfg);

/// Default LFR max degree: min(n/10, 3<k>^2), further capped so that every
/// node's internal degree fits the smallest community.
std::int32_t lfr_default_max_degree(const LFRConfig& cfg);

/// i.i.d. draws with P(x) proportional to x^-exponent on the integers
/// [min, max], by inverse CDF over the discrete support.
std::vector<std::int64_t> sample_powerlaw_sequence(double exponent, std::int64_t min,
                                                   std::int64_t max, std::size_t length,
                                                   std::uint64_t seed);

/// Power-law community sizes on [cmin, cmax] that sum exactly to n. Sizes
/// are drawn until they cover n; the overshoot is then removed from the
/// last draw (or spread over earlier ones) without leaving [cmin, cmax].
std::vector<NodeId> sample_community_sizes(NodeId n, NodeId cmin, NodeId cmax,
                                           double exponent, Rng& rng);

}  // namespace commbench
