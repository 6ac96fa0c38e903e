#pragma once

#include <cstdint>
#include <unordered_set>

#include "commbench/graph.hpp"

namespace commbench {

// Membership set for undirected edges under construction.
class EdgeSet {
 public:
  static std::uint64_t key(NodeId u, NodeId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
  }
  bool contains(NodeId u, NodeId v) const { return set_.contains(key(u, v)); }
  bool insert(NodeId u, NodeId v) { return set_.insert(key(u, v)).second; }
  void erase(NodeId u, NodeId v) { set_.erase(key(u, v)); }
  void reserve(std::size_t n) { set_.reserve(n); }

 private:
  std::unordered_set<std::uint64_t> set_;
};

}  // namespace commbench
