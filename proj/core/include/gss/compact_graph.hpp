#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gss/graph.hpp"

namespace gss {

// Immutable CSR adjacency snapshot used by the metric computations and the
// offline samplers. Node ids are compacted to [0, V) with labels() mapping
// back to the ids of the source graph; neighbor lists are sorted.
class CompactGraph {
 public:
  CompactGraph() = default;

  // Build from edges over dense ids [0, node_count); isolated ids are kept.
  static CompactGraph from_edges(std::size_t node_count,
                                 std::span<const Edge> edges);

  // Build from the endpoints of an edge subset only (no isolated nodes).
  static CompactGraph from_edge_subset(std::span<const Edge> edges);

  static CompactGraph from_graph(const SampledGraph& g);

  std::size_t node_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const NodeId> neighbors(NodeId local) const {
    return {adj_.data() + offsets_[local],
            adj_.data() + offsets_[local + 1]};
  }

  std::size_t degree(NodeId local) const {
    return offsets_[local + 1] - offsets_[local];
  }

  NodeId label(NodeId local) const { return labels_[local]; }
  std::span<const NodeId> labels() const { return labels_; }

  // Canonical edge list over local ids, sorted.
  std::vector<Edge> edge_list() const;

 private:
  std::vector<std::uint64_t> offsets_;  // size V + 1
  std::vector<NodeId> adj_;             // local ids
  std::vector<NodeId> labels_;          // local -> source id
  std::size_t edge_count_ = 0;
};

}  // namespace gss
