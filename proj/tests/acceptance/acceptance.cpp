// End-to-end acceptance checks. One PASS/FAIL line per criterion; exit code
// is the number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "commbench/clustering.hpp"
#include "commbench/generators.hpp"
#include "commbench/graph.hpp"
#include "commbench/harness.hpp"
#include "commbench/metrics.hpp"
#include "oracles.hpp"

using namespace commbench;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

oracle::EdgeList edge_list(const Graph& g) {
  oracle::EdgeList out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<int> as_ints(const Partition& p) {
  return {p.labels().begin(), p.labels().end()};
}

Graph random_graph(NodeId n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

Partition random_partition(NodeId n, int max_labels, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> label(0, max_labels - 1);
  std::vector<std::int32_t> labels(static_cast<std::size_t>(n));
  for (auto& l : labels) l = label(rng);
  return Partition(labels);
}

// Algorithm-averaged NMI per cell, keyed by (model, n, k, mu, range).
using CellKey = std::tuple<Model, NodeId, double, double, std::string>;

std::map<CellKey, AggregateRow> averaged(const SweepSpec& spec) {
  auto records = run_sweep(spec);
  std::map<CellKey, AggregateRow> out;
  for (const auto& row : aggregate(records, spec.instances)) {
    if (row.algorithm != kAllAlgorithms) continue;
    out[{row.model, row.n, row.avg_degree, row.mixing, row.range}] = row;
  }
  return out;
}

SweepSpec cell_spec(std::vector<Model> models, std::vector<NodeId> sizes,
                    std::vector<double> degrees, std::vector<double> mixings,
                    std::vector<std::string> ranges) {
  SweepSpec spec;
  spec.models = std::move(models);
  spec.sizes = std::move(sizes);
  spec.degrees = std::move(degrees);
  spec.mixings = std::move(mixings);
  std::erase_if(spec.ranges, [&](const SizeRange& r) {
    return std::find(ranges.begin(), ranges.end(), r.name) == ranges.end();
  });
  return spec;
}

std::string row_text(const AggregateRow& r) {
  return fmt("%.3f%s", r.mean, r.flagged ? "(flagged)" : "");
}

Outcome grid_cardinality() {
  const auto start = Clock::now();
  const Grid grid = expand_grid(SweepSpec{});
  std::map<Model, std::set<std::tuple<NodeId, double, double, std::string>>> unique;
  std::map<std::tuple<Model, NodeId, double, double, std::string>, std::set<int>> instances;
  for (const auto& c : grid.networks) {
    unique[c.model].insert({c.n, c.avg_degree, c.mixing, c.range});
    instances[{c.model, c.n, c.avg_degree, c.mixing, c.range}].insert(c.instance);
  }
  bool ok = unique.size() == 2;
  for (const auto& [m, cells] : unique) ok = ok && cells.size() == 81;
  for (const auto& [key, seen] : instances) ok = ok && seen == std::set<int>{0, 1, 2, 3, 4};
  const double secs = seconds_since(start);
  ok = ok && secs < 1.0;
  return {ok, fmt("nsc=%zu lfr=%zu networks=%zu runs=%zu in %.3fs",
                  unique[Model::nsc].size(), unique[Model::lfr].size(), grid.networks.size(),
                  grid.runs.size(), secs)};
}

Outcome nsc_power_law() {
  SweepSpec spec = cell_spec({Model::nsc}, {100000}, {10.0}, {0.2, 0.5, 0.8},
                             {"many", "middling", "few"});
  bool ok = true;
  double lo = 1e9, hi = 0.0, slowest = 0.0;
  int count = 0;
  for (const auto& cfg : expand_grid(spec).networks) {
    const auto start = Clock::now();
    const auto net = generate_network(cfg, spec);
    const auto fit = powerlaw_mle(net.graph.degrees());
    slowest = std::max(slowest, seconds_since(start));
    lo = std::min(lo, fit.exponent);
    hi = std::max(hi, fit.exponent);
    ok = ok && fit.exponent > 2.0 && fit.exponent < 4.0;
    ++count;
  }
  ok = ok && slowest < 120.0;
  return {ok, fmt("%d instances, gamma in [%.3f, %.3f], slowest %.1fs", count, lo, hi, slowest)};
}

Outcome nsc_path_length() {
  const auto start = Clock::now();
  std::vector<double> means;
  for (NodeId n : {1000, 10000, 100000}) {
    double total = 0.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      std::vector<NodeId> sizes(5, n / 5);
      auto net = generate_nsc({sizes, 10.0, 0.5, seed});
      total += average_path_length(net.graph, {.seed = seed}).mean;
    }
    means.push_back(total / 5.0);
  }
  const double secs = seconds_since(start);
  const bool ok = means[0] < means[1] && means[1] < means[2] && means[2] - means[0] < 4.0 &&
                  secs < 900.0;
  return {ok, fmt("APL 10^3=%.3f 10^4=%.3f 10^5=%.3f in %.0fs", means[0], means[1], means[2],
                  secs)};
}

Outcome mixing_trend() {
  const auto start = Clock::now();
  auto cells = averaged(cell_spec({Model::lfr}, {1000}, {10.0}, {0.2, 0.5, 0.8}, {"many"}));
  const auto& a = cells.at({Model::lfr, 1000, 10.0, 0.2, "many"});
  const auto& b = cells.at({Model::lfr, 1000, 10.0, 0.5, "many"});
  const auto& c = cells.at({Model::lfr, 1000, 10.0, 0.8, "many"});
  const double secs = seconds_since(start);
  const bool ok = b.mean < a.mean + 0.02 && c.mean < b.mean + 0.02 && a.mean >= 0.85 &&
                  !a.flagged && !b.flagged && !c.flagged && secs < 600.0;
  return {ok, fmt("NMI mu=.2:%s mu=.5:%s mu=.8:%s in %.0fs", row_text(a).c_str(),
                  row_text(b).c_str(), row_text(c).c_str(), secs)};
}

Outcome size_trend() {
  const auto start = Clock::now();
  auto cells = averaged(
      cell_spec({Model::nsc, Model::lfr}, {1000, 10000}, {5.0}, {0.5}, {"few"}));
  bool ok = true;
  std::string detail;
  for (Model m : {Model::nsc, Model::lfr}) {
    const auto& small = cells.at({m, 1000, 5.0, 0.5, "few"});
    const auto& large = cells.at({m, 10000, 5.0, 0.5, "few"});
    ok = ok && large.mean <= small.mean + 0.02 && !small.flagged && !large.flagged;
    detail += fmt("%s 10^3:%s 10^4:%s; ", std::string(to_string(m)).c_str(),
                  row_text(small).c_str(), row_text(large).c_str());
  }
  const double secs = seconds_since(start);
  ok = ok && secs < 1200.0;
  return {ok, detail + fmt("in %.0fs", secs)};
}

Outcome cluster_size_trend() {
  const auto start = Clock::now();
  auto cells = averaged(
      cell_spec({Model::nsc, Model::lfr}, {1000}, {10.0}, {0.5}, {"many", "few"}));
  bool ok = true;
  std::string detail;
  for (Model m : {Model::nsc, Model::lfr}) {
    const auto& many = cells.at({m, 1000, 10.0, 0.5, "many"});
    const auto& few = cells.at({m, 1000, 10.0, 0.5, "few"});
    ok = ok && few.mean <= many.mean + 0.02 && !many.flagged && !few.flagged;
    detail += fmt("%s 20-50:%s 200-300:%s; ", std::string(to_string(m)).c_str(),
                  row_text(many).c_str(), row_text(few).c_str());
  }
  const double secs = seconds_since(start);
  ok = ok && secs < 600.0;
  return {ok, detail + fmt("in %.0fs", secs)};
}

Outcome degree_trend() {
  const auto start = Clock::now();
  auto cells =
      averaged(cell_spec({Model::nsc, Model::lfr}, {1000}, {3.0, 10.0}, {0.2}, {"many"}));
  bool ok = true;
  std::string detail;
  for (Model m : {Model::nsc, Model::lfr}) {
    const auto& sparse = cells.at({m, 1000, 3.0, 0.2, "many"});
    const auto& dense = cells.at({m, 1000, 10.0, 0.2, "many"});
    ok = ok && dense.mean >= sparse.mean - 0.02 && !sparse.flagged && !dense.flagged;
    detail += fmt("%s k=3:%s k=10:%s; ", std::string(to_string(m)).c_str(),
                  row_text(sparse).c_str(), row_text(dense).c_str());
  }
  const double secs = seconds_since(start);
  ok = ok && secs < 600.0;
  return {ok, detail + fmt("in %.0fs", secs)};
}

Outcome oracle_equivalence() {
  const auto start = Clock::now();
  std::mt19937_64 rng(8);
  int graphs = 0, cnm_miss = 0, louvain_miss = 0;
  double worst = 0.0;
  while (graphs < 50) {
    const NodeId n = std::uniform_int_distribution<NodeId>(4, 9)(rng);
    Graph g = random_graph(n, 0.4, rng);
    if (g.edge_count() == 0) continue;
    ++graphs;
    const double best = oracle::max_modularity(n, edge_list(g)).q;
    const double q_cnm = modularity(g, fastgreedy_cnm(g).partition);
    const double q_louvain = modularity(g, louvain(g, static_cast<std::uint64_t>(graphs)).partition);
    cnm_miss += q_cnm < best - 0.05;
    louvain_miss += q_louvain < best - 0.05;
    worst = std::max({worst, best - q_cnm, best - q_louvain});
  }

  int pairs = 0;
  double max_err = 0.0;
  while (pairs < 200) {
    const NodeId n = std::uniform_int_distribution<NodeId>(2, 30)(rng);
    Graph g = random_graph(n, std::uniform_real_distribution<double>(0.05, 0.6)(rng), rng);
    if (g.edge_count() == 0) continue;
    ++pairs;
    const Partition p = random_partition(n, std::uniform_int_distribution<int>(1, 6)(rng), rng);
    max_err = std::max(max_err, std::abs(modularity(g, p) -
                                         oracle::modularity(n, edge_list(g), as_ints(p))));
  }
  const double secs = seconds_since(start);
  const bool ok = cnm_miss == 0 && louvain_miss == 0 && max_err <= 1e-12 && secs < 120.0;
  return {ok, fmt("optimum misses cnm=%d louvain=%d of 50 (worst gap %.4f); "
                  "modularity max err %.2e over 200 pairs; in %.1fs",
                  cnm_miss, louvain_miss, worst, max_err, secs)};
}

Outcome nmi_axioms() {
  const auto start = Clock::now();
  std::mt19937_64 rng(9);
  int violations = 0;
  double max_asym = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Partition a = random_partition(50, std::uniform_int_distribution<int>(1, 10)(rng), rng);
    const Partition b = random_partition(50, std::uniform_int_distribution<int>(1, 10)(rng), rng);
    const double ab = nmi(a, b), ba = nmi(b, a);
    max_asym = std::max(max_asym, std::abs(ab - ba));
    violations += !(ab >= 0.0 && ab <= 1.0);
    violations += std::abs(nmi(a, a) - 1.0) > 1e-12;

    std::vector<std::int32_t> perm(50);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::int32_t> renamed;
    for (auto l : a.labels()) renamed.push_back(perm[static_cast<std::size_t>(l)] + 7);
    violations += std::abs(nmi(Partition(renamed), b) - ab) > 1e-12;
  }
  violations += max_asym > 1e-12;

  const std::vector<std::int32_t> halves{0, 0, 1, 1}, crossed{0, 1, 0, 1}, one{0, 0, 0, 0};
  const double z1 = nmi(Partition(halves), Partition(crossed));
  const double z2 = nmi(Partition(one), Partition(halves));
  const double secs = seconds_since(start);
  const bool ok = violations == 0 && std::abs(z1) <= 1e-12 && std::abs(z2) <= 1e-12 &&
                  secs < 10.0;
  return {ok, fmt("violations=%d max asymmetry %.1e; zero cases %.1e %.1e; in %.2fs",
                  violations, max_asym, z1, z2, secs)};
}

Outcome nsc_accounting() {
  const auto start = Clock::now();
  std::mt19937_64 rng(10);
  int bad_budget = 0, bad_blocks = 0, bad_components = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int blocks = std::uniform_int_distribution<int>(1, 5)(rng);
    const double k = std::uniform_int_distribution<int>(2, 10)(rng);
    std::vector<NodeId> sizes;
    for (int i = 0; i < blocks; ++i) {
      sizes.push_back(std::uniform_int_distribution<NodeId>(12, 200)(rng));
    }
    const double mu = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const auto seed = static_cast<std::uint64_t>(rng());
    const auto net = generate_nsc({sizes, k, mu, seed});
    const auto& r = *net.nsc;

    double spent = 0.0;
    for (int i = 0; i < blocks; ++i) spent += r.initial[i] - r.remaining[i];
    bad_budget += std::abs(spent - 2.0 * static_cast<double>(r.inter_edges)) > 1e-9;

    std::int64_t intra = 0;
    NodeId offset = 0;
    for (int i = 0; i < blocks; ++i) {
      std::vector<NodeId> nodes(static_cast<std::size_t>(sizes[i]));
      std::iota(nodes.begin(), nodes.end(), offset);
      const Graph block = net.graph.induced(nodes);
      bad_blocks += !(block == generate_ba({sizes[i], k, r.block_seeds[i]}));
      intra += block.edge_count();
      offset += sizes[i];
    }
    bad_budget += intra + r.inter_edges != net.graph.edge_count();

    const auto isolated = generate_nsc({sizes, k, 0.0, seed});
    const Partition comps(connected_components(isolated.graph));
    bad_components += !oracle::same_partition(as_ints(comps), as_ints(isolated.ground_truth)) ||
                      isolated.nsc->inter_edges != 0;
  }
  const double secs = seconds_since(start);
  const bool ok = bad_budget == 0 && bad_blocks == 0 && bad_components == 0 && secs < 60.0;
  return {ok, fmt("budget mismatches=%d altered blocks=%d mu=0 component mismatches=%d; "
                  "in %.1fs",
                  bad_budget, bad_blocks, bad_components, secs)};
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome sweep_determinism() {
  const auto start = Clock::now();
  const fs::path dir = fs::temp_directory_path() / "commbench_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  {
    std::ofstream spec(dir / "spec.json");
    spec << R"({"models": ["nsc", "lfr"], "sizes": [1000], "degrees": [5, 10],)"
            R"( "mixings": [0.2, 0.6], "ranges": [{"name": "many", "cmin": 20, "cmax": 50}],)"
            R"( "instances": 2, "master_seed": 42})";
  }
  auto run = [&](const std::string& name, int workers) {
    const std::string cmd = std::string(COMMBENCH_CLI) + " sweep --spec " +
                            (dir / "spec.json").string() + " --out " + (dir / name).string() +
                            " --workers " + std::to_string(workers) + " > /dev/null 2>&1";
    return std::system(cmd.c_str());
  };
  const int s1 = run("first.csv", 1);
  const int s2 = run("second.csv", 1);
  const int s3 = run("parallel.csv", 2);
  const std::string a = read_file(dir / "first.csv");
  const std::string b = read_file(dir / "second.csv");
  const std::string c = read_file(dir / "parallel.csv");
  const double secs = seconds_since(start);
  const bool ok = s1 == 0 && s2 == 0 && s3 == 0 && !a.empty() && a == b && a == c &&
                  secs < 300.0;
  fs::remove_all(dir);
  return {ok, fmt("exit %d/%d/%d, %zu bytes, repeat identical=%d, 2-worker identical=%d; "
                  "in %.1fs",
                  s1, s2, s3, a.size(), int(a == b), int(a == c), secs)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"grid cardinality", grid_cardinality},
      {"NSC power-law exponent", nsc_power_law},
      {"NSC path-length growth", nsc_path_length},
      {"NMI falls with mixing", mixing_trend},
      {"NMI falls with network size", size_trend},
      {"NMI falls with community size", cluster_size_trend},
      {"NMI rises with degree", degree_trend},
      {"modularity oracles", oracle_equivalence},
      {"NMI axioms", nmi_axioms},
      {"NSC accounting", nsc_accounting},
      {"sweep determinism", sweep_determinism},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures;
}
