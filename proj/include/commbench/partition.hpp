#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "commbench/graph.hpp"

namespace commbench {

enum class PartitionRole { ground_truth, predicted };

/// Hard, flat assignment of nodes to communities.
///
/// Labels are canonicalized on construction: communities are renumbered
/// 0..count-1 in order of first appearance.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::span<const std::int32_t> labels,
                     PartitionRole role = PartitionRole::predicted);

  NodeId size() const { return static_cast<NodeId>(labels_.size()); }
  std::int32_t num_communities() const { return num_communities_; }
  std::span<const std::int32_t> labels() const { return labels_; }
  std::int32_t operator[](NodeId u) const { return labels_[u]; }
  PartitionRole role() const { return role_; }

  std::vector<NodeId> community_sizes() const;
  std::vector<std::vector<NodeId>> members() const;

  /// Equal assignments (the role is ignored).
  friend bool operator==(const Partition& a, const Partition& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::int32_t> labels_;
  std::int32_t num_communities_ = 0;
  PartitionRole role_ = PartitionRole::predicted;
};

}  // namespace commbench
