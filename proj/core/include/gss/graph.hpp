#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace gss {

// Dense vertex identifier. Ingestion remaps arbitrary file ids to [0, N).
using NodeId = std::uint32_t;

// Undirected edge in canonical orientation (u < v), so {a,b} and {b,a}
// compare equal.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  static Edge of(NodeId a, NodeId b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  auto operator<=>(const Edge&) const = default;
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    std::uint64_t k = (static_cast<std::uint64_t>(e.u) << 32) | e.v;
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    return static_cast<std::size_t>(k);
  }
};

// Mutable undirected simple graph with hash-set adjacency. Holds the evolving
// sample (V_s, E_s); small full graphs reuse it as well. Adjacency is kept
// symmetric and stores exactly 2 * edge_count() entries.
//
// Single-writer: one sampler mutates an instance; readers take snapshots.
class SampledGraph {
 public:
  // Idempotent. Returns true if the node was newly inserted.
  bool add_node(NodeId u);

  // Both endpoints must already be present (samplers establish endpoint
  // membership before inserting edges). Duplicate insertion is a no-op.
  // Returns true if the edge was newly inserted.
  bool add_edge(NodeId u, NodeId v);
  bool add_edge(const Edge& e) { return add_edge(e.u, e.v); }

  // Returns true if the edge existed and was removed.
  bool remove_edge(NodeId u, NodeId v);
  bool remove_edge(const Edge& e) { return remove_edge(e.u, e.v); }

  // Removes u together with all incident edges and returns u's former degree.
  // A missing node is tolerated as a counted no-op (see missing_removals()).
  std::size_t remove_node(NodeId u);

  bool has_node(NodeId u) const { return adj_.contains(u); }
  bool has_edge(NodeId u, NodeId v) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  std::size_t degree(NodeId u) const;
  const std::unordered_set<NodeId>& neighbors(NodeId u) const;

  std::size_t node_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return adj_.empty(); }

  std::vector<NodeId> node_ids() const;  // sorted
  std::vector<Edge> edge_list() const;   // canonical, sorted

  // Total adjacency entries; equals 2 * edge_count() when invariants hold.
  std::size_t adjacency_entry_count() const;

  std::size_t missing_removals() const { return missing_removals_; }

  void clear();

  friend bool operator==(const SampledGraph& a, const SampledGraph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  std::unordered_map<NodeId, std::unordered_set<NodeId>> adj_;
  std::size_t edge_count_ = 0;
  std::size_t missing_removals_ = 0;
};

}  // namespace gss
