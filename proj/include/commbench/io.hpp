#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "commbench/graph.hpp"
#include "commbench/partition.hpp"

namespace commbench {

// Edge files: one "u<TAB>v" line per undirected edge, 1-based ids, u < v, LF
// line endings, no header. Community files: "node<TAB>label", 1-based node
// ids and dense 1-based labels. Readers accept any whitespace separator,
// either endpoint order, blank lines and '#' comments.

void write_edge_list(std::ostream& out, const Graph& g);
void write_communities(std::ostream& out, const Partition& p);

struct EdgeList {
  NodeId node_count = 0;  // largest id seen
  std::vector<Edge> edges;  // zero-based
};

EdgeList read_edge_list(std::istream& in, const std::string& source = "<edges>");
Partition read_communities(std::istream& in, const std::string& source = "<communities>",
                           PartitionRole role = PartitionRole::ground_truth);

struct LoadedNetwork {
  Graph graph;
  std::optional<Partition> communities;
};

void save_network(const std::filesystem::path& edge_file, const Graph& g,
                  const std::optional<std::filesystem::path>& community_file = std::nullopt,
                  const Partition* communities = nullptr);

/// Node count is the largest id in either file.
LoadedNetwork load_network(const std::filesystem::path& edge_file,
                           const std::optional<std::filesystem::path>& community_file = std::nullopt);

Partition load_partition(const std::filesystem::path& community_file,
                         PartitionRole role = PartitionRole::ground_truth);
void save_partition(const std::filesystem::path& community_file, const Partition& p);

}  // namespace commbench
