#include "gss/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace gss {

bool SampledGraph::add_node(NodeId u) {
  return adj_.try_emplace(u).second;
}

bool SampledGraph::add_edge(NodeId u, NodeId v) {
  if (u == v) {
    throw std::logic_error("add_edge: self-loops are not allowed");
  }
  auto iu = adj_.find(u);
  auto iv = adj_.find(v);
  if (iu == adj_.end() || iv == adj_.end()) {
    throw std::logic_error("add_edge: endpoint not in graph");
  }
  if (!iu->second.insert(v).second) {
    return false;  // duplicate
  }
  iv->second.insert(u);
  ++edge_count_;
  return true;
}

bool SampledGraph::remove_edge(NodeId u, NodeId v) {
  auto iu = adj_.find(u);
  if (iu == adj_.end() || iu->second.erase(v) == 0) {
    return false;
  }
  adj_.find(v)->second.erase(u);
  --edge_count_;
  return true;
}

std::size_t SampledGraph::remove_node(NodeId u) {
  auto it = adj_.find(u);
  if (it == adj_.end()) {
    ++missing_removals_;
    return 0;
  }
  std::size_t deg = it->second.size();
  for (NodeId w : it->second) {
    adj_.find(w)->second.erase(u);
  }
  edge_count_ -= deg;
  adj_.erase(it);
  return deg;
}

bool SampledGraph::has_edge(NodeId u, NodeId v) const {
  auto it = adj_.find(u);
  return it != adj_.end() && it->second.contains(v);
}

std::size_t SampledGraph::degree(NodeId u) const {
  auto it = adj_.find(u);
  return it == adj_.end() ? 0 : it->second.size();
}

const std::unordered_set<NodeId>& SampledGraph::neighbors(NodeId u) const {
  auto it = adj_.find(u);
  if (it == adj_.end()) {
    throw std::out_of_range("neighbors: node not in graph");
  }
  return it->second;
}

std::vector<NodeId> SampledGraph::node_ids() const {
  std::vector<NodeId> ids;
  ids.reserve(adj_.size());
  for (const auto& [u, _] : adj_) {
    ids.push_back(u);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<Edge> SampledGraph::edge_list() const {
  std::vector<Edge> edges;
  edges.reserve(edge_count_);
  for (const auto& [u, nbrs] : adj_) {
    for (NodeId v : nbrs) {
      if (u < v) {
        edges.push_back(Edge{u, v});
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::size_t SampledGraph::adjacency_entry_count() const {
  std::size_t total = 0;
  for (const auto& [_, nbrs] : adj_) {
    total += nbrs.size();
  }
  return total;
}

void SampledGraph::clear() {
  adj_.clear();
  edge_count_ = 0;
  missing_removals_ = 0;
}

}  // namespace gss
