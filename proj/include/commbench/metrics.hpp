#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "commbench/graph.hpp"
#include "commbench/partition.hpp"

namespace commbench {

/// Overlap counts between two partitions of the same nodes: entry (i, j) is
/// the number of nodes in community i of `a` and community j of `b`.
struct ConfusionMatrix {
  using Counts = Eigen::SparseMatrix<std::int64_t>;
  using Sums = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

  Counts counts;
  Sums row_sums;
  Sums col_sums;
  std::int64_t total = 0;
};

ConfusionMatrix confusion(const Partition& a, const Partition& b);

/// Normalized mutual information in the form of Danon et al.; 1 for
/// identical partitions, 0 for independent ones.
double nmi(const Partition& a, const Partition& b);

/// Newman modularity Q = sum_c [ e_c / m - (d_c / 2m)^2 ].
double modularity(const Graph& g, const Partition& p);

struct PowerLawFit {
  double exponent = 0.0;
  std::int32_t kmin = 0;
  std::size_t sample_size = 0;
};

/// max(2, floor(mean / 2)).
std::int32_t default_powerlaw_kmin(std::span<const std::int32_t> degrees);

/// Tail maximum-likelihood exponent with the discrete correction
/// gamma = 1 + n / sum ln(k_i / (kmin - 1/2)) over k_i >= kmin.
PowerLawFit powerlaw_mle(std::span<const std::int32_t> degrees, std::int32_t kmin);
PowerLawFit powerlaw_mle(std::span<const std::int32_t> degrees);

struct NetworkSummary {
  NodeId nodes = 0;
  std::int64_t edges = 0;
  double edge_node_ratio = 0.0;
  double clustering = 0.0;
  std::optional<PathLengthResult> path_length;
  std::optional<PowerLawFit> powerlaw;
  std::int32_t max_degree = 0;
  NodeId degree_one = 0;
  std::int32_t max_core = 0;
};

NetworkSummary network_summary(const Graph& g, const PathLengthOptions& apl = {});

/// Single-line "key=value" record.
std::string to_key_value(const NetworkSummary& s);
/// JSON object text.
std::string to_json(const NetworkSummary& s, int indent = -1);

}  // namespace commbench
