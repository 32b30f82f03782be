#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "gss/graph.hpp"
#include "gss/rng.hpp"

namespace gss::testing {

inline SampledGraph graph_from_edges(
    std::initializer_list<std::pair<NodeId, NodeId>> edges) {
  SampledGraph g;
  for (auto [a, b] : edges) {
    g.add_node(a);
    g.add_node(b);
    g.add_edge(Edge::of(a, b));
  }
  return g;
}

inline std::vector<Edge> edges_of(
    std::initializer_list<std::pair<NodeId, NodeId>> pairs) {
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) {
    edges.push_back(Edge::of(a, b));
  }
  return edges;
}

// Random simple graph on n nodes with edge probability p; node ids 0..n-1
// appear only as endpoints, so the edge list may cover fewer than n ids.
inline std::vector<Edge> random_edges(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u + 1 < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (rng.uniform01() < p) {
        edges.push_back(Edge{u, v});
      }
    }
  }
  return edges;
}

}  // namespace gss::testing
