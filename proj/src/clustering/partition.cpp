#include "commbench/partition.hpp"

#include <unordered_map>

#include "commbench/error.hpp"

namespace commbench {

Partition::Partition(std::span<const std::int32_t> labels, PartitionRole role)
    : role_(role) {
  labels_.reserve(labels.size());
  std::unordered_map<std::int32_t, std::int32_t> canonical;
  for (std::int32_t raw : labels) {
    auto [it, inserted] = canonical.try_emplace(raw, num_communities_);
    if (inserted) ++num_communities_;
    labels_.push_back(it->second);
  }
}

std::vector<NodeId> Partition::community_sizes() const {
  std::vector<NodeId> sizes(static_cast<std::size_t>(num_communities_), 0);
  for (auto c : labels_) ++sizes[c];
  return sizes;
}

std::vector<std::vector<NodeId>> Partition::members() const {
  std::vector<std::vector<NodeId>> out(static_cast<std::size_t>(num_communities_));
  for (NodeId u = 0; u < size(); ++u) out[labels_[u]].push_back(u);
  return out;
}

}  // namespace commbench
