#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "commbench/error.hpp"
#include "commbench/metrics.hpp"

namespace commbench {

NetworkSummary network_summary(const Graph& g, const PathLengthOptions& apl) {
  NetworkSummary s;
  s.nodes = g.node_count();
  s.edges = g.edge_count();
  s.edge_node_ratio = s.nodes > 0 ? static_cast<double>(s.edges) / s.nodes : 0.0;
  s.clustering = clustering_coefficient(g);
  const auto degrees = g.degrees();
  for (auto d : degrees) {
    s.max_degree = std::max(s.max_degree, d);
    if (d == 1) ++s.degree_one;
  }
  s.max_core = k_core_decomposition(g).max_core;
  if (s.nodes >= 2) {
    try {
      s.path_length = average_path_length(g, apl);
    } catch (const DataError&) {
      // no reachable pair; the field stays absent
    }
  }
  try {
    s.powerlaw = powerlaw_mle(degrees);
  } catch (const DataError&) {
  }
  return s;
}

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

std::string to_key_value(const NetworkSummary& s) {
  std::ostringstream out;
  out << "N=" << s.nodes << " E=" << s.edges << " R=" << fixed(s.edge_node_ratio, 1)
      << " CC=" << fixed(s.clustering, 4)
      << " APL=" << (s.path_length ? fixed(s.path_length->mean, 4) : "NA")
      << " APL_unreachable=" << (s.path_length ? fixed(s.path_length->unreachable_fraction, 4) : "NA")
      << " gamma=" << (s.powerlaw ? fixed(s.powerlaw->exponent, 3) : "NA")
      << " gamma_kmin=" << (s.powerlaw ? std::to_string(s.powerlaw->kmin) : "NA")
      << " MaxD=" << s.max_degree << " D1=" << s.degree_one << " MaxK=" << s.max_core
      << " cc_definition=average_local_deg_lt2_zero";
  return out.str();
}

std::string to_json(const NetworkSummary& s, int indent) {
  nlohmann::ordered_json j;
  j["N"] = s.nodes;
  j["E"] = s.edges;
  j["R"] = std::round(s.edge_node_ratio * 10.0) / 10.0;
  j["CC"] = s.clustering;
  j["cc_definition"] = "average local clustering; nodes with degree < 2 contribute 0";
  if (s.path_length) {
    j["APL"] = s.path_length->mean;
    j["APL_unreachable_fraction"] = s.path_length->unreachable_fraction;
    j["APL_exact"] = s.path_length->exact;
    j["APL_sources"] = s.path_length->sources;
  } else {
    j["APL"] = nullptr;
  }
  if (s.powerlaw) {
    j["gamma"] = s.powerlaw->exponent;
    j["gamma_kmin"] = s.powerlaw->kmin;
    j["gamma_tail_size"] = s.powerlaw->sample_size;
  } else {
    j["gamma"] = nullptr;
  }
  j["MaxD"] = s.max_degree;
  j["D1"] = s.degree_one;
  j["MaxK"] = s.max_core;
  return j.dump(indent);
}

}  // namespace commbench
