#include <atomic>
#include <chrono>
#include <cstdio>
#include <memory>
#include <mutex>
#include <ostream>
#include <thread>

#include "commbench/harness.hpp"
#include "commbench/metrics.hpp"

namespace commbench {

std::string_view to_string(RunStatus s) {
  switch (s) {
    case RunStatus::converged:
      return "true";
    case RunStatus::not_converged:
      return "false";
    case RunStatus::skipped:
      return "skipped";
    case RunStatus::failed:
      return "error";
  }
  return "error";
}

namespace {

// One generated instance shared by the runs of its cell.
struct NetworkSlot {
  std::once_flag once;
  std::shared_ptr<const GeneratedNetwork> network;
  std::string error;
  std::atomic<std::size_t> pending{0};
};

RunRecord execute(const NetworkConfig& cfg, Algorithm algorithm, NetworkSlot& slot,
                  const SweepSpec& spec) {
  RunRecord rec;
  rec.network = cfg;
  rec.algorithm = algorithm;
  if (!slot.network) {
    rec.status = RunStatus::failed;
    rec.error = "generation failed: " + slot.error;
    return rec;
  }
  const GeneratedNetwork& net = *slot.network;
  rec.communities_true = net.ground_truth.num_communities();
  if (algorithm == Algorithm::mcl && cfg.n > spec.mcl_size_cap) {
    rec.status = RunStatus::skipped;
    rec.error = "mcl skipped above size cap";
    return rec;
  }
  try {
    const auto start = std::chrono::steady_clock::now();
    ClusteringResult result =
        run_algorithm(algorithm, net.graph, algorithm_seed(cfg.seed, algorithm), spec.params);
    rec.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (net.graph.edge_count() > 0) rec.q = modularity(net.graph, result.partition);
    rec.communities_found = result.partition.num_communities();
    if (result.converged) {
      rec.nmi = nmi(net.ground_truth, result.partition);
      rec.status = RunStatus::converged;
    } else {
      // Flagged and left out of the averages.
      rec.status = RunStatus::not_converged;
      rec.error = "did not converge";
    }
  } catch (const std::exception& e) {
    rec.status = RunStatus::failed;
    rec.error = e.what();
  }
  return rec;
}

}  // namespace

std::vector<RunRecord> run_sweep(const SweepSpec& spec, unsigned workers, std::ostream* log) {
  const Grid grid = expand_grid(spec);
  std::vector<NetworkSlot> slots(grid.networks.size());
  for (const auto& run : grid.runs) ++slots[run.network].pending;

  std::vector<RunRecord> records(grid.runs.size());
  std::atomic<std::size_t> next{0};
  std::mutex log_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next++;
      if (i >= grid.runs.size()) return;
      const RunConfig& run = grid.runs[i];
      const NetworkConfig& cfg = grid.networks[run.network];
      NetworkSlot& slot = slots[run.network];
      std::call_once(slot.once, [&] {
        try {
          slot.network = std::make_shared<const GeneratedNetwork>(generate_network(cfg, spec));
        } catch (const std::exception& e) {
          slot.error = e.what();
        }
      });
      records[i] = execute(cfg, run.algorithm, slot, spec);
      if (--slot.pending == 0) slot.network.reset();

      if (log) {
        const RunRecord& r = records[i];
        std::lock_guard lock(log_mutex);
        *log << "[" << (i + 1) << "/" << grid.runs.size() << "] " << to_string(cfg.model)
             << " n=" << cfg.n << " k=" << cfg.avg_degree << " mu=" << cfg.mixing << " "
             << cfg.range << " #" << cfg.instance << " " << to_string(run.algorithm) << ": "
             << (r.nmi ? "nmi=" + std::to_string(*r.nmi) : std::string(to_string(r.status)))
             << (r.error.empty() ? "" : " (" + r.error + ")") << '\n';
      }
    }
  };

  workers = std::max(1u, workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  return records;
}

namespace {

std::string number(double v, const char* fmt) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

}  // namespace

void write_results_csv(std::ostream& out, std::span<const RunRecord> records,
                       bool include_runtime) {
  out << kResultsHeader << '\n';
  for (const RunRecord& r : records) {
    const auto& c = r.network;
    out << to_string(c.model) << ',' << c.n << ',' << number(c.avg_degree, "%g") << ','
        << number(c.mixing, "%g") << ',' << c.range << ',' << c.instance << ',' << c.seed << ','
        << to_string(r.algorithm) << ',' << (r.nmi ? number(*r.nmi, "%.6f") : "") << ','
        << (r.q ? number(*r.q, "%.6f") : "") << ',' << r.communities_true << ','
        << (r.communities_found ? std::to_string(*r.communities_found) : "") << ','
        << (include_runtime && r.status != RunStatus::skipped ? number(r.runtime_ms, "%.3f") : "")
        << ',' << to_string(r.status) << '\n';
  }
}

void write_timings_csv(std::ostream& out, std::span<const RunRecord> records) {
  out << "model,n,k,mu,range,instance,algorithm,runtime_ms,error\n";
  for (const RunRecord& r : records) {
    const auto& c = r.network;
    std::string error = r.error;
    for (char& ch : error) {
      if (ch == ',' || ch == '\n') ch = ';';
    }
    out << to_string(c.model) << ',' << c.n << ',' << number(c.avg_degree, "%g") << ','
        << number(c.mixing, "%g") << ',' << c.range << ',' << c.instance << ','
        << to_string(r.algorithm) << ',' << number(r.runtime_ms, "%.3f") << ',' << error << '\n';
  }
}

}  // namespace commbench
