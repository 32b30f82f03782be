#include "gss/compact_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace gss {

CompactGraph CompactGraph::from_edges(std::size_t node_count,
                                      std::span<const Edge> edges) {
  std::vector<NodeId> labels(node_count);
  std::iota(labels.begin(), labels.end(), NodeId{0});

  std::vector<std::pair<NodeId, NodeId>> local_edges;
  local_edges.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= node_count || e.v >= node_count) {
      throw std::out_of_range("from_edges: endpoint outside [0, N)");
    }
    local_edges.emplace_back(e.u, e.v);
  }

  CompactGraph g;
  g.labels_ = std::move(labels);
  g.offsets_.assign(node_count + 1, 0);
  for (const auto& [u, v] : local_edges) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 1; i <= node_count; ++i) {
    g.offsets_[i] += g.offsets_[i - 1];
  }
  g.adj_.resize(g.offsets_[node_count]);
  std::vector<std::uint64_t> cursor(g.offsets_.begin(),
                                    g.offsets_.end() - 1);
  for (const auto& [u, v] : local_edges) {
    g.adj_[cursor[u]++] = v;
    g.adj_[cursor[v]++] = u;
  }
  for (std::size_t u = 0; u < node_count; ++u) {
    std::sort(g.adj_.begin() + g.offsets_[u],
              g.adj_.begin() + g.offsets_[u + 1]);
  }
  g.edge_count_ = local_edges.size();
  return g;
}

CompactGraph CompactGraph::from_edge_subset(std::span<const Edge> edges) {
  std::vector<NodeId> ids;
  ids.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    ids.push_back(e.u);
    ids.push_back(e.v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  std::unordered_map<NodeId, NodeId> local;
  local.reserve(ids.size());
  for (NodeId i = 0; i < ids.size(); ++i) {
    local.emplace(ids[i], i);
  }
  std::vector<Edge> remapped;
  remapped.reserve(edges.size());
  for (const Edge& e : edges) {
    remapped.push_back(Edge::of(local[e.u], local[e.v]));
  }

  CompactGraph g = from_edges(ids.size(), remapped);
  g.labels_ = std::move(ids);
  return g;
}

CompactGraph CompactGraph::from_graph(const SampledGraph& g) {
  std::vector<NodeId> ids = g.node_ids();
  std::unordered_map<NodeId, NodeId> local;
  local.reserve(ids.size());
  for (NodeId i = 0; i < ids.size(); ++i) {
    local.emplace(ids[i], i);
  }
  std::vector<Edge> remapped;
  remapped.reserve(g.edge_count());
  for (const Edge& e : g.edge_list()) {
    remapped.push_back(Edge::of(local[e.u], local[e.v]));
  }
  CompactGraph out = from_edges(ids.size(), remapped);
  out.labels_ = std::move(ids);
  return out;
}

std::vector<Edge> CompactGraph::edge_list() const {
  std::vector<Edge> edges;
  edges.reserve(edge_count_);
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) {
        edges.push_back(Edge{u, v});
      }
    }
  }
  return edges;
}

}  // namespace gss
