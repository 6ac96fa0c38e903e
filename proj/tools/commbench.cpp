#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "commbench/clustering.hpp"
#include "commbench/error.hpp"
#include "commbench/generators.hpp"
#include "commbench/harness.hpp"
#include "commbench/io.hpp"
#include "commbench/metrics.hpp"

using namespace commbench;

namespace {

constexpr int kUsage = 1;
constexpr int kData = 2;
constexpr int kPartial = 3;

struct GenArgs {
  std::string model;
  NodeId n = 0;
  double k = 0.0;
  double mu = 0.0;
  std::vector<NodeId> sizes;
  NodeId cmin = 0;
  NodeId cmax = 0;
  std::int32_t communities = 4;
  std::uint64_t seed = 1;
  std::string out;
  std::string truth;
};

int run_gen(const GenArgs& a) {
  const bool have_sizes = !a.sizes.empty();
  const bool have_range = a.cmin > 0 || a.cmax > 0;
  if (have_sizes && have_range) throw ConfigError("--sizes and --cmin/--cmax are exclusive");

  if (a.model == "ba") {
    Graph g = generate_ba({a.n, a.k, a.seed});
    if (!a.truth.empty()) throw ConfigError("ba networks have no ground truth");
    save_network(a.out, g);
    return 0;
  }

  GeneratedNetwork net = [&]() -> GeneratedNetwork {
    if (a.model == "nsc") {
      NSCConfig cfg;
      cfg.avg_degree = a.k;
      cfg.mixing = a.mu;
      cfg.seed = a.seed;
      if (have_sizes) {
        cfg.community_sizes = a.sizes;
      } else {
        if (!have_range) throw ConfigError("nsc needs --sizes or --cmin/--cmax");
        Rng rng = make_rng(derive_seed(a.seed, "community-sizes"));
        cfg.community_sizes = sample_community_sizes(a.n, a.cmin, a.cmax, 1.0, rng);
      }
      return generate_nsc(cfg);
    }
    if (a.model == "lfr") {
      if (have_sizes) throw ConfigError("lfr takes --cmin/--cmax, not --sizes");
      LFRConfig cfg;
      cfg.n = a.n;
      cfg.avg_degree = a.k;
      cfg.mixing = a.mu;
      cfg.seed = a.seed;
      if (have_range) {
        cfg.min_community = a.cmin;
        cfg.max_community = a.cmax;
      }
      return generate_lfr_like(cfg);
    }
    if (a.model == "gn") {
      return generate_gn({a.n, a.communities, a.k, a.mu, a.seed});
    }
    throw ConfigError("unknown model '" + a.model + "'");
  }();

  if (a.truth.empty()) {
    save_network(a.out, net.graph);
  } else {
    save_network(a.out, net.graph, std::filesystem::path(a.truth), &net.ground_truth);
  }
  return 0;
}

struct ClusterArgs {
  std::string algo;
  std::string in;
  std::string out;
  std::uint64_t seed = 1;
  int t = 4;
  double inflation = 2.0;
};

int run_cluster(const ClusterArgs& a) {
  auto algorithm = parse_algorithm(a.algo);
  if (!algorithm) throw ConfigError("unknown algorithm '" + a.algo + "'");
  AlgorithmParams params;
  params.walk_length = a.t;
  params.mcl.inflation = a.inflation;
  LoadedNetwork net = load_network(a.in);
  ClusteringResult result = run_algorithm(*algorithm, net.graph, a.seed, params);
  save_partition(a.out, result.partition);
  if (!result.converged) std::cerr << "warning: " << a.algo << " did not converge\n";
  return 0;
}

int run_eval(const std::string& truth, const std::string& pred) {
  Partition t = load_partition(truth, PartitionRole::ground_truth);
  Partition p = load_partition(pred, PartitionRole::predicted);
  if (t.size() != p.size()) {
    throw DataError("partitions cover different node counts (" + std::to_string(t.size()) +
                    " vs " + std::to_string(p.size()) + ")");
  }
  std::printf("nmi=%.6f\n", nmi(t, p));
  return 0;
}

int run_summary(const std::string& in, bool json) {
  LoadedNetwork net = load_network(in);
  NetworkSummary s = network_summary(net.graph);
  std::cout << (json ? to_json(s, 2) : to_key_value(s)) << "\n";
  return 0;
}

struct SweepArgs {
  std::string spec;
  std::string out;
  std::string plots;
  unsigned workers = 1;
};

int run_sweep_cmd(const SweepArgs& a) {
  std::ifstream in(a.spec);
  if (!in) throw ConfigError("cannot read spec file " + a.spec);
  std::stringstream text;
  text << in.rdbuf();
  SweepSpec spec = parse_sweep_spec(text.str());
  validate(spec);

  std::vector<RunRecord> records = run_sweep(spec, std::max(1u, a.workers), &std::cerr);

  const std::filesystem::path out_path(a.out);
  if (out_path.has_parent_path()) std::filesystem::create_directories(out_path.parent_path());
  auto open = [](const std::filesystem::path& p) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw DataError("cannot write " + p.string());
    return f;
  };
  {
    auto f = open(out_path);
    write_results_csv(f, records, spec.record_runtime);
  }
  auto sibling = [&](const std::string& suffix) {
    auto p = out_path;
    p.replace_filename(out_path.stem().string() + suffix);
    return p;
  };
  {
    auto f = open(sibling("_timings.csv"));
    write_timings_csv(f, records);
  }
  auto rows = aggregate(records, spec.instances);
  {
    auto f = open(sibling("_aggregate.csv"));
    write_aggregate_csv(f, rows);
  }
  if (!a.plots.empty()) emit_plots(rows, a.plots, spec);

  const auto failed = std::count_if(records.begin(), records.end(),
                                    [](const RunRecord& r) { return r.status == RunStatus::failed; });
  if (failed > 0) {
    std::cerr << failed << " of " << records.size() << " runs failed\n";
    return kPartial;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Community detection benchmark on synthetic networks"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a network");
  gen_cmd->add_option("--model", gen.model, "nsc, lfr, ba or gn")->required();
  gen_cmd->add_option("--n", gen.n, "Node count");
  gen_cmd->add_option("--k", gen.k, "Average degree")->required();
  gen_cmd->add_option("--mu", gen.mu, "Mixing parameter");
  gen_cmd->add_option("--sizes", gen.sizes, "Community sizes (nsc)")->delimiter(',');
  gen_cmd->add_option("--cmin", gen.cmin, "Smallest community");
  gen_cmd->add_option("--cmax", gen.cmax, "Largest community");
  gen_cmd->add_option("--communities", gen.communities, "Community count (gn)");
  gen_cmd->add_option("--seed", gen.seed, "Seed")->required();
  gen_cmd->add_option("--out", gen.out, "Edge file")->required();
  gen_cmd->add_option("--truth", gen.truth, "Ground-truth community file");

  ClusterArgs cl;
  auto* cl_cmd = app.add_subcommand("cluster", "Run one clustering algorithm");
  cl_cmd->add_option("--algo", cl.algo, "cnm, louvain, lp, walktrap or mcl")->required();
  cl_cmd->add_option("--in", cl.in, "Edge file")->required();
  cl_cmd->add_option("--out", cl.out, "Community file")->required();
  cl_cmd->add_option("--seed", cl.seed, "Seed");
  cl_cmd->add_option("--t", cl.t, "Walk length (walktrap)");
  cl_cmd->add_option("--inflation", cl.inflation, "Inflation (mcl)");

  std::string truth, pred;
  auto* eval_cmd = app.add_subcommand("eval", "NMI between two community files");
  eval_cmd->add_option("--truth", truth)->required();
  eval_cmd->add_option("--pred", pred)->required();

  std::string summary_in;
  bool summary_json = false;
  auto* sum_cmd = app.add_subcommand("summary", "Structural metrics of a network");
  sum_cmd->add_option("--in", summary_in)->required();
  sum_cmd->add_flag("--json", summary_json);

  SweepArgs sw;
  auto* sw_cmd = app.add_subcommand("sweep", "Run a parameter sweep");
  sw_cmd->add_option("--spec", sw.spec, "JSON sweep file")->required();
  sw_cmd->add_option("--out", sw.out, "results.csv")->required();
  sw_cmd->add_option("--plots", sw.plots, "Plot directory");
  sw_cmd->add_option("--workers", sw.workers, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen_cmd) {
      if (gen.model != "ba" && gen.model != "gn" && gen.model != "nsc" && gen.model != "lfr") {
        throw ConfigError("unknown model '" + gen.model + "'");
      }
      if (gen.model != "nsc" || gen.sizes.empty()) {
        if (gen.n <= 0) throw ConfigError("--n is required");
      }
      return run_gen(gen);
    }
    if (*cl_cmd) return run_cluster(cl);
    if (*eval_cmd) return run_eval(truth, pred);
    if (*sum_cmd) return run_summary(summary_in, summary_json);
    if (*sw_cmd) return run_sweep_cmd(sw);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kData;
  }
  return kUsage;
}
