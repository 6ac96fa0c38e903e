#include <array>

#include "commbench/clustering.hpp"

namespace commbench {

namespace {
constexpr std::array<std::pair<Algorithm, std::string_view>, 5> kNames{{
    {Algorithm::cnm, "cnm"},
    {Algorithm::louvain, "louvain"},
    {Algorithm::lp, "lp"},
    {Algorithm::walktrap, "walktrap"},
    {Algorithm::mcl, "mcl"},
}};
}  // namespace

std::string_view to_string(Algorithm a) {
  for (const auto& [alg, name] : kNames) {
    if (alg == a) return name;
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (const auto& [alg, n] : kNames) {
    if (n == name) return alg;
  }
  return std::nullopt;
}

std::vector<Algorithm> all_algorithms() {
  std::vector<Algorithm> out;
  for (const auto& entry : kNames) out.push_back(entry.first);
  return out;
}

ClusteringResult run_algorithm(Algorithm algorithm, const Graph& g, std::uint64_t seed,
                               const AlgorithmParams& params) {
  switch (algorithm) {
    case Algorithm::cnm:
      return fastgreedy_cnm(g);
    case Algorithm::louvain:
      return louvain(g, seed, params.louvain);
    case Algorithm::lp:
      return label_propagation(g, seed, params.lp_max_sweeps);
    case Algorithm::walktrap:
      return walktrap(g, params.walk_length);
    case Algorithm::mcl:
      return mcl(g, params.mcl);
  }
  return {};
}

}  // namespace commbench
