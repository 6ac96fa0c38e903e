#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <set>

#include "commbench/error.hpp"
#include "commbench/harness.hpp"

namespace commbench {

std::string_view to_string(Model m) { return m == Model::nsc ? "nsc" : "lfr"; }

std::optional<Model> parse_model(std::string_view name) {
  if (name == "nsc") return Model::nsc;
  if (name == "lfr") return Model::lfr;
  return std::nullopt;
}

namespace {

template <typename T>
T read(const nlohmann::json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("sweep spec field '") + key + "': " + e.what());
  }
}

std::string exact(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

SweepSpec parse_sweep_spec(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("sweep spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("sweep spec must be a JSON object");

  static const std::set<std::string> known{
      "models",       "sizes",          "degrees",      "mixings",         "ranges",
      "reference_size", "algorithms",   "instances",    "master_seed",     "mcl_size_cap",
      "walk_length",  "mcl_inflation",  "mcl_expansion", "lfr",            "record_runtime"};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw ConfigError("unknown sweep spec field '" + key + "'");
  }

  SweepSpec spec;
  if (j.contains("models")) {
    spec.models.clear();
    for (const auto& name : read<std::vector<std::string>>(j, "models")) {
      auto m = parse_model(name);
      if (!m) throw ConfigError("unknown model '" + name + "'");
      spec.models.push_back(*m);
    }
  }
  if (j.contains("sizes")) spec.sizes = read<std::vector<NodeId>>(j, "sizes");
  if (j.contains("degrees")) spec.degrees = read<std::vector<double>>(j, "degrees");
  if (j.contains("mixings")) spec.mixings = read<std::vector<double>>(j, "mixings");
  if (j.contains("ranges")) {
    spec.ranges.clear();
    for (const auto& r : j.at("ranges")) {
      spec.ranges.push_back({read<std::string>(r, "name"), read<NodeId>(r, "cmin"),
                             read<NodeId>(r, "cmax")});
    }
  }
  if (j.contains("reference_size")) spec.reference_size = read<NodeId>(j, "reference_size");
  if (j.contains("algorithms")) {
    spec.algorithms.clear();
    for (const auto& name : read<std::vector<std::string>>(j, "algorithms")) {
      auto a = parse_algorithm(name);
      if (!a) throw ConfigError("unknown algorithm '" + name + "'");
      spec.algorithms.push_back(*a);
    }
  }
  if (j.contains("instances")) spec.instances = read<int>(j, "instances");
  if (j.contains("master_seed")) spec.master_seed = read<std::uint64_t>(j, "master_seed");
  if (j.contains("mcl_size_cap")) spec.mcl_size_cap = read<NodeId>(j, "mcl_size_cap");
  if (j.contains("walk_length")) spec.params.walk_length = read<int>(j, "walk_length");
  if (j.contains("mcl_inflation")) spec.params.mcl.inflation = read<double>(j, "mcl_inflation");
  if (j.contains("mcl_expansion")) spec.params.mcl.expansion = read<int>(j, "mcl_expansion");
  if (j.contains("lfr")) {
    const auto& lfr = j.at("lfr");
    for (const auto& [key, value] : lfr.items()) {
      if (key != "degree_exponent" && key != "community_exponent" && key != "max_degree") {
        throw ConfigError("unknown lfr field '" + key + "'");
      }
    }
    if (lfr.contains("degree_exponent")) spec.degree_exponent = read<double>(lfr, "degree_exponent");
    if (lfr.contains("community_exponent")) {
      spec.community_exponent = read<double>(lfr, "community_exponent");
    }
    if (lfr.contains("max_degree")) spec.lfr_max_degree = read<std::int32_t>(lfr, "max_degree");
  }
  if (j.contains("record_runtime")) spec.record_runtime = read<bool>(j, "record_runtime");
  validate(spec);
  return spec;
}

void validate(const SweepSpec& spec) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw ConfigError(what);
  };
  require(!spec.models.empty(), "sweep spec: empty models dimension");
  require(!spec.sizes.empty(), "sweep spec: empty sizes dimension");
  require(!spec.degrees.empty(), "sweep spec: empty degrees dimension");
  require(!spec.mixings.empty(), "sweep spec: empty mixings dimension");
  require(!spec.ranges.empty(), "sweep spec: empty ranges dimension");
  require(!spec.algorithms.empty(), "sweep spec: empty algorithms dimension");
  require(spec.instances >= 1, "sweep spec: instances must be >= 1");
  require(spec.reference_size >= 1, "sweep spec: reference_size must be >= 1");
  for (double mu : spec.mixings) require(mu >= 0.0 && mu <= 1.0, "sweep spec: mixing outside [0, 1]");
  for (const auto& r : spec.ranges) {
    require(r.cmin >= 1 && r.cmin <= r.cmax, "sweep spec: range needs 1 <= cmin <= cmax");
  }
}

std::uint64_t network_seed(std::uint64_t master_seed, const NetworkConfig& cfg) {
  const std::string key = std::string(to_string(cfg.model)) + "|" + std::to_string(cfg.n) + "|" +
                          exact(cfg.avg_degree) + "|" + exact(cfg.mixing) + "|" + cfg.range + "|" +
                          std::to_string(cfg.instance);
  return derive_seed(master_seed, key);
}

std::uint64_t algorithm_seed(std::uint64_t seed, Algorithm algorithm) {
  return derive_seed(seed, to_string(algorithm));
}

Grid expand_grid(const SweepSpec& spec) {
  validate(spec);
  Grid grid;
  for (Model model : spec.models) {
    for (NodeId n : spec.sizes) {
      for (double k : spec.degrees) {
        for (double mu : spec.mixings) {
          for (const auto& range : spec.ranges) {
            for (int instance = 0; instance < spec.instances; ++instance) {
              NetworkConfig cfg;
              cfg.model = model;
              cfg.n = n;
              cfg.avg_degree = k;
              cfg.mixing = mu;
              cfg.range = range.name;
              const double scale = static_cast<double>(n) / spec.reference_size;
              cfg.cmin = static_cast<NodeId>(std::llround(range.cmin * scale));
              cfg.cmax = static_cast<NodeId>(std::llround(range.cmax * scale));
              cfg.instance = instance;
              cfg.seed = network_seed(spec.master_seed, cfg);
              for (Algorithm a : spec.algorithms) grid.runs.push_back({grid.networks.size(), a});
              grid.networks.push_back(std::move(cfg));
            }
          }
        }
      }
    }
  }
  return grid;
}

GeneratedNetwork generate_network(const NetworkConfig& cfg, const SweepSpec& spec) {
  if (cfg.model == Model::lfr) {
    LFRConfig lfr;
    lfr.n = cfg.n;
    lfr.avg_degree = cfg.avg_degree;
    lfr.max_degree = spec.lfr_max_degree;
    lfr.degree_exponent = spec.degree_exponent;
    lfr.community_exponent = spec.community_exponent;
    lfr.mixing = cfg.mixing;
    lfr.min_community = cfg.cmin;
    lfr.max_community = cfg.cmax;
    lfr.seed = cfg.seed;
    return generate_lfr_like(lfr);
  }
  NSCConfig nsc;
  Rng rng = make_rng(derive_seed(cfg.seed, "community-sizes"));
  nsc.community_sizes =
      sample_community_sizes(cfg.n, cfg.cmin, cfg.cmax, spec.community_exponent, rng);
  nsc.avg_degree = cfg.avg_degree;
  nsc.mixing = cfg.mixing;
  nsc.seed = cfg.seed;
  return generate_nsc(nsc);
}

}  // namespace commbench
