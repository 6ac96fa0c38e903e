#pragma once

// Slow, independent reference computations used to check the library.
// They work on plain edge lists and dense matrices and share no code with
// the implementations under test.

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;

/// Q by classifying every edge as intra or inter.
double modularity(int n, const EdgeList& edges, const std::vector<int>& labels);

struct BestPartition {
  double q = 0.0;
  std::vector<int> labels;
};

/// Maximum modularity over all set partitions (restricted growth strings).
/// Feasible up to n = 10 or so.
BestPartition max_modularity(int n, const EdgeList& edges);

/// Average local clustering by enumerating neighbor pairs.
double average_clustering(int n, const EdgeList& edges);

/// Core numbers by repeated deletion for every k.
std::vector<int> core_numbers(int n, const EdgeList& edges);

/// All-pairs BFS mean over reachable ordered pairs.
double mean_distance(int n, const EdgeList& edges);

/// Mean of P(x) ~ x^-exponent on the integers [lo, hi].
double truncated_zeta_mean(double exponent, std::int64_t lo, std::int64_t hi);

/// Markov clustering with dense matrices, following the textbook loop:
/// add self-loops, column-normalize, then expand, inflate, prune and
/// renormalize until the largest entry change drops below `tolerance`.
Eigen::MatrixXd mcl_limit(int n, const EdgeList& edges, double inflation, int expansion,
                          double prune, double tolerance, int max_iterations);

/// Clusters read off a limit matrix: attractors are nodes with a nonzero
/// diagonal; each node joins the lowest attractor system that attracts it.
std::vector<int> mcl_clusters(const Eigen::MatrixXd& limit);

/// Partitions compared up to renaming of labels.
bool same_partition(const std::vector<int>& a, const std::vector<int>& b);

/// Danon NMI straight from the formula with a dense contingency table.
double nmi(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace oracle
