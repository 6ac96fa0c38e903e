#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "commbench/clustering.hpp"
#include "commbench/generators.hpp"

namespace commbench {

enum class Model { nsc, lfr };

std::string_view to_string(Model m);
std::optional<Model> parse_model(std::string_view name);

/// Named community-size range. Bounds are given at `SweepSpec::reference_size`
/// nodes and scale linearly with n.
struct SizeRange {
  std::string name;
  NodeId cmin = 0;
  NodeId cmax = 0;
};

struct SweepSpec {
  std::vector<Model> models{Model::nsc, Model::lfr};
  std::vector<NodeId> sizes{1000, 10000, 100000};
  std::vector<double> degrees{3.0, 5.0, 10.0};
  std::vector<double> mixings{0.2, 0.5, 0.8};
  std::vector<SizeRange> ranges{{"many", 20, 50}, {"middling", 100, 150}, {"few", 200, 300}};
  NodeId reference_size = 1000;
  std::vector<Algorithm> algorithms = all_algorithms();
  int instances = 5;
  std::uint64_t master_seed = 1;
  NodeId mcl_size_cap = 10000;
  AlgorithmParams params;
  double degree_exponent = 2.0;
  double community_exponent = 1.0;
  std::int32_t lfr_max_degree = 0;
  /// Wall-clock times make results.csv run-dependent, so they are written
  /// only on request.
  bool record_runtime = false;
};

/// Parses the JSON sweep file; omitted keys keep their defaults.
SweepSpec parse_sweep_spec(std::string_view json_text);
void validate(const SweepSpec& spec);

struct NetworkConfig {
  Model model = Model::nsc;
  NodeId n = 0;
  double avg_degree = 0.0;
  double mixing = 0.0;
  std::string range;
  NodeId cmin = 0;  // scaled to n
  NodeId cmax = 0;
  int instance = 0;
  std::uint64_t seed = 0;
};

struct RunConfig {
  std::size_t network;  // index into Grid::networks
  Algorithm algorithm;
};

struct Grid {
  std::vector<NetworkConfig> networks;
  std::vector<RunConfig> runs;
};

/// Order: model, n, k, mu, range, instance, algorithm.
Grid expand_grid(const SweepSpec& spec);

/// Network seed: splitmix64 of the FNV-1a hash of
/// "model|n|k|mu|range|instance" keyed by the master seed. Algorithm seeds
/// derive from it by algorithm name, so the algorithm list never perturbs
/// generation.
std::uint64_t network_seed(std::uint64_t master_seed, const NetworkConfig& cfg);
std::uint64_t algorithm_seed(std::uint64_t network_seed, Algorithm algorithm);

GeneratedNetwork generate_network(const NetworkConfig& cfg, const SweepSpec& spec);

enum class RunStatus { converged, not_converged, skipped, failed };
std::string_view to_string(RunStatus s);

struct RunRecord {
  NetworkConfig network;
  Algorithm algorithm = Algorithm::cnm;
  std::optional<double> nmi;
  std::optional<double> q;
  std::int32_t communities_true = 0;
  std::optional<std::int32_t> communities_found;
  double runtime_ms = 0.0;
  RunStatus status = RunStatus::failed;
  std::string error;
};

/// Runs every grid cell. Each network is generated once and shared by its
/// algorithms; records come back in grid order whatever the scheduling.
/// Per-run failures are recorded, never thrown.
std::vector<RunRecord> run_sweep(const SweepSpec& spec, unsigned workers = 1,
                                 std::ostream* log = nullptr);

inline constexpr std::string_view kResultsHeader =
    "model,n,k,mu,range,instance,seed,algorithm,nmi,q,communities_true,communities_found,"
    "runtime_ms,converged";

void write_results_csv(std::ostream& out, std::span<const RunRecord> records,
                       bool include_runtime);
void write_timings_csv(std::ostream& out, std::span<const RunRecord> records);

/// "all" marks the algorithm-averaged row of a cell.
inline constexpr std::string_view kAllAlgorithms = "all";

struct AggregateRow {
  Model model = Model::nsc;
  NodeId n = 0;
  double avg_degree = 0.0;
  double mixing = 0.0;
  std::string range;
  NodeId cmin = 0;
  NodeId cmax = 0;
  std::string algorithm;
  double mean = 0.0;
  double stddev = 0.0;
  int count = 0;     // successful instances
  int expected = 0;  // configured instances
  bool flagged = false;
};

/// Mean and sample standard deviation of NMI over instances, per
/// (model, n, k, mu, range, algorithm), plus one algorithm-averaged row per
/// cell (per-instance mean over algorithms, then over instances). Cells with
/// fewer successful instances than configured are flagged.
std::vector<AggregateRow> aggregate(std::span<const RunRecord> records, int instances);
void write_aggregate_csv(std::ostream& out, std::span<const AggregateRow> rows);

/// Writes the three trend plot families (NMI vs n, vs k, vs mu) for every
/// model and algorithm key. Returns the written files.
std::vector<std::filesystem::path> emit_plots(std::span<const AggregateRow> rows,
                                              const std::filesystem::path& out_dir,
                                              const SweepSpec& spec);

}  // namespace commbench
