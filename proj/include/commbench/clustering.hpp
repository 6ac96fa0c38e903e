#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "commbench/graph.hpp"
#include "commbench/partition.hpp"

namespace commbench {

struct ClusteringResult {
  Partition partition;
  /// False when an iterative method hit its iteration cap.
  bool converged = true;
};

/// Agglomerative merge history. Leaves are 0..n-1; merge i creates cluster
/// n + i from clusters `a` and `b`.
struct Dendrogram {
  struct Merge {
    std::int32_t a;
    std::int32_t b;
    double quality;  // modularity after the merge
  };

  NodeId node_count = 0;
  double initial_quality = 0.0;  // modularity of the all-singletons partition
  std::vector<Merge> merges;

  /// Number of leading merges giving the highest quality (earliest on ties).
  std::size_t best_cut() const;
  /// Partition after applying the first `merge_count` merges.
  Partition cut(std::size_t merge_count) const;
};

// No community ever spans two connected components. Label propagation and
// MCL run on each component separately; the modularity-driven methods see
// the whole graph so that their cut maximizes its global modularity.

/// Clauset-Newman-Moore greedy modularity agglomeration, cut at max Q.
ClusteringResult fastgreedy_cnm(const Graph& g);
/// Full CNM merge history: n - 1 merges on a connected graph, one fewer per
/// extra component otherwise.
Dendrogram cnm_dendrogram(const Graph& g);

struct LouvainOptions {
  double min_improvement = 1e-7;
  int max_passes = 1000;
};
ClusteringResult louvain(const Graph& g, std::uint64_t seed, const LouvainOptions& options = {});

ClusteringResult label_propagation(const Graph& g, std::uint64_t seed, int max_sweeps = 100);

/// Pons-Latapy walktrap with walks of length `walk_length`, cut at max Q.
ClusteringResult walktrap(const Graph& g, int walk_length = 4);
Dendrogram walktrap_dendrogram(const Graph& g, int walk_length = 4);

struct MclOptions {
  double inflation = 2.0;
  int expansion = 2;
  double prune_threshold = 1e-5;
  double tolerance = 1e-6;
  int max_iterations = 200;
};
ClusteringResult mcl(const Graph& g, const MclOptions& options = {});

enum class Algorithm { cnm, louvain, lp, walktrap, mcl };

std::string_view to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);
std::vector<Algorithm> all_algorithms();

struct AlgorithmParams {
  int walk_length = 4;
  MclOptions mcl;
  LouvainOptions louvain;
  int lp_max_sweeps = 100;
};

ClusteringResult run_algorithm(Algorithm algorithm, const Graph& g, std::uint64_t seed,
                               const AlgorithmParams& params = {});

}  // namespace commbench
