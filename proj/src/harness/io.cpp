#include "commbench/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "commbench/error.hpp"

namespace commbench {

namespace {

[[noreturn]] void malformed(const std::string& source, std::size_t line, const std::string& what) {
  throw DataError(source + ":" + std::to_string(line) + ": " + what);
}

// Splits a data line into exactly two positive integers. Returns false for
// blank and comment lines.
bool parse_pair(const std::string& text, const std::string& source, std::size_t line,
                std::int64_t& first, std::int64_t& second) {
  std::istringstream fields(text);
  std::string a, b, extra;
  if (!(fields >> a)) return false;
  if (a[0] == '#') return false;
  if (!(fields >> b) || (fields >> extra)) malformed(source, line, "expected two fields");
  auto to_int = [&](const std::string& s, std::int64_t& v) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      malformed(source, line, "'" + s + "' is not an integer");
    }
    if (v < 1 || v > std::numeric_limits<NodeId>::max()) {
      malformed(source, line, "id " + s + " out of range (ids are 1-based)");
    }
  };
  to_int(a, first);
  to_int(b, second);
  return true;
}

std::ifstream open_in(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw DataError("cannot open " + p.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw DataError("cannot write " + p.string());
  return out;
}

}  // namespace

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const Edge& e : g.edges()) out << (e.u + 1) << '\t' << (e.v + 1) << '\n';
}

void write_communities(std::ostream& out, const Partition& p) {
  for (NodeId u = 0; u < p.size(); ++u) out << (u + 1) << '\t' << (p[u] + 1) << '\n';
}

EdgeList read_edge_list(std::istream& in, const std::string& source) {
  EdgeList out;
  std::unordered_map<std::uint64_t, std::size_t> first_seen;
  std::string text;
  for (std::size_t line = 1; std::getline(in, text); ++line) {
    if (!text.empty() && text.back() == '\r') text.pop_back();
    std::int64_t u, v;
    if (!parse_pair(text, source, line, u, v)) continue;
    if (u == v) malformed(source, line, "self-loop on node " + std::to_string(u));
    const auto key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) | static_cast<std::uint64_t>(std::max(u, v));
    if (auto [it, fresh] = first_seen.try_emplace(key, line); !fresh) {
      malformed(source, line, "duplicate edge (" + std::to_string(std::min(u, v)) + ", " +
                                  std::to_string(std::max(u, v)) + "), first on line " +
                                  std::to_string(it->second));
    }
    out.edges.push_back({static_cast<NodeId>(std::min(u, v) - 1), static_cast<NodeId>(std::max(u, v) - 1)});
    out.node_count = std::max<NodeId>(out.node_count, static_cast<NodeId>(std::max(u, v)));
  }
  return out;
}

Partition read_communities(std::istream& in, const std::string& source, PartitionRole role) {
  std::vector<std::int32_t> labels;
  std::vector<std::size_t> defined_at;
  std::string text;
  for (std::size_t line = 1; std::getline(in, text); ++line) {
    if (!text.empty() && text.back() == '\r') text.pop_back();
    std::int64_t node, label;
    if (!parse_pair(text, source, line, node, label)) continue;
    if (static_cast<std::size_t>(node) > labels.size()) {
      labels.resize(static_cast<std::size_t>(node), -1);
      defined_at.resize(static_cast<std::size_t>(node), 0);
    }
    if (labels[node - 1] >= 0) {
      malformed(source, line, "node " + std::to_string(node) + " already labelled on line " +
                                  std::to_string(defined_at[node - 1]));
    }
    labels[node - 1] = static_cast<std::int32_t>(label);
    defined_at[node - 1] = line;
  }
  for (std::size_t u = 0; u < labels.size(); ++u) {
    if (labels[u] < 0) throw DataError(source + ": node " + std::to_string(u + 1) + " has no label");
  }
  return Partition(labels, role);
}

void save_network(const std::filesystem::path& edge_file, const Graph& g,
                  const std::optional<std::filesystem::path>& community_file,
                  const Partition* communities) {
  auto out = open_out(edge_file);
  write_edge_list(out, g);
  if (community_file && communities) save_partition(*community_file, *communities);
}

LoadedNetwork load_network(const std::filesystem::path& edge_file,
                           const std::optional<std::filesystem::path>& community_file) {
  auto in = open_in(edge_file);
  EdgeList list = read_edge_list(in, edge_file.string());
  LoadedNetwork out;
  NodeId n = list.node_count;
  if (community_file) {
    out.communities = load_partition(*community_file);
    if (out.communities->size() < n) {
      throw DataError(community_file->string() + ": labels " +
                      std::to_string(out.communities->size()) + " nodes but the edge list uses " +
                      std::to_string(n));
    }
    n = out.communities->size();
  }
  try {
    out.graph = build_graph(n, list.edges);
  } catch (const DataError& e) {
    throw DataError(edge_file.string() + ": " + e.what());
  }
  return out;
}

Partition load_partition(const std::filesystem::path& community_file, PartitionRole role) {
  auto in = open_in(community_file);
  return read_communities(in, community_file.string(), role);
}

void save_partition(const std::filesystem::path& community_file, const Partition& p) {
  auto out = open_out(community_file);
  write_communities(out, p);
}

}  // namespace commbench
