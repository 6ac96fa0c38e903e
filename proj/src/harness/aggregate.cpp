#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <tuple>

#include "commbench/harness.hpp"

namespace commbench {

namespace {

struct CellKey {
  Model model;
  NodeId n;
  double k;
  double mu;
  std::string range;
  auto tie() const { return std::tie(model, n, k, mu, range); }
  bool operator<(const CellKey& o) const { return tie() < o.tie(); }
};

void fill_stats(AggregateRow& row, const std::vector<double>& values, int instances) {
  row.count = static_cast<int>(values.size());
  row.expected = instances;
  row.flagged = row.count < instances;
  if (values.empty()) return;
  double sum = 0.0;
  for (double v : values) sum += v;
  row.mean = sum / values.size();
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - row.mean) * (v - row.mean);
    row.stddev = std::sqrt(ss / (values.size() - 1));
  }
}

}  // namespace

std::vector<AggregateRow> aggregate(std::span<const RunRecord> records, int instances) {
  struct Cell {
    NodeId cmin = 0, cmax = 0;
    std::vector<std::string> algorithm_order;
    std::map<std::string, std::vector<double>> by_algorithm;
    std::map<int, std::vector<double>> by_instance;
  };
  std::map<CellKey, Cell> cells;
  std::vector<CellKey> order;

  for (const RunRecord& r : records) {
    const auto& c = r.network;
    CellKey key{c.model, c.n, c.avg_degree, c.mixing, c.range};
    auto [it, fresh] = cells.try_emplace(key);
    if (fresh) order.push_back(key);
    Cell& cell = it->second;
    cell.cmin = c.cmin;
    cell.cmax = c.cmax;
    const std::string alg(to_string(r.algorithm));
    if (!cell.by_algorithm.contains(alg)) cell.algorithm_order.push_back(alg);
    auto& values = cell.by_algorithm[alg];
    if (r.nmi) {
      values.push_back(*r.nmi);
      cell.by_instance[c.instance].push_back(*r.nmi);
    }
  }

  std::vector<AggregateRow> rows;
  for (const CellKey& key : order) {
    const Cell& cell = cells.at(key);
    auto base = [&](std::string algorithm) {
      AggregateRow row;
      row.model = key.model;
      row.n = key.n;
      row.avg_degree = key.k;
      row.mixing = key.mu;
      row.range = key.range;
      row.cmin = cell.cmin;
      row.cmax = cell.cmax;
      row.algorithm = std::move(algorithm);
      return row;
    };
    bool any_flagged = false;
    for (const auto& alg : cell.algorithm_order) {
      AggregateRow row = base(alg);
      fill_stats(row, cell.by_algorithm.at(alg), instances);
      any_flagged = any_flagged || row.flagged;
      rows.push_back(std::move(row));
    }
    std::vector<double> per_instance;
    for (const auto& [instance, values] : cell.by_instance) {
      double s = 0.0;
      for (double v : values) s += v;
      per_instance.push_back(s / values.size());
    }
    AggregateRow all = base(std::string(kAllAlgorithms));
    fill_stats(all, per_instance, instances);
    all.flagged = all.flagged || any_flagged;
    rows.push_back(std::move(all));
  }
  return rows;
}

void write_aggregate_csv(std::ostream& out, std::span<const AggregateRow> rows) {
  out << "model,n,k,mu,range,cmin,cmax,algorithm,nmi_mean,nmi_std,count,expected,flagged\n";
  char buf[64];
  for (const auto& r : rows) {
    out << to_string(r.model) << ',' << r.n << ',';
    std::snprintf(buf, sizeof buf, "%g,%g,", r.avg_degree, r.mixing);
    out << buf << r.range << ',' << r.cmin << ',' << r.cmax << ',' << r.algorithm << ',';
    if (r.count > 0) {
      std::snprintf(buf, sizeof buf, "%.6f,%.6f", r.mean, r.stddev);
      out << buf;
    } else {
      out << ',';
    }
    out << ',' << r.count << ',' << r.expected << ',' << (r.flagged ? "true" : "false") << '\n';
  }
}

}  // namespace commbench
