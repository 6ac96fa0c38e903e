#pragma once

#include <functional>

#include "commbench/clustering.hpp"

namespace commbench::detail {

// Runs `run` on every connected component with at least one edge and merges
// the labels; isolated nodes become singletons.
ClusteringResult per_component(const Graph& g,
                               const std::function<ClusteringResult(const Graph&)>& run);

void require_edges(const Graph& g, const char* algorithm);

}  // namespace commbench::detail
