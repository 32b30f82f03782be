#include "gss/metrics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <vector>

#include "gss/rng.hpp"

namespace gss {

namespace {

void require_nodes(const CompactGraph& g, const char* op) {
  if (g.node_count() == 0) {
    throw std::invalid_argument(std::string(op) + ": empty graph");
  }
}

Distribution from_count_map(const std::map<double, std::uint64_t>& counts) {
  std::vector<std::pair<double, std::uint64_t>> pairs(counts.begin(),
                                                      counts.end());
  return Distribution::from_counts(std::move(pairs));
}

// Per-node triangle counts via the forward algorithm: each triangle is found
// once at its lowest-ordered vertex pair and credited to all three corners.
std::vector<std::uint64_t> local_triangles(const CompactGraph& g) {
  std::size_t n = g.node_count();
  std::vector<NodeId> rank(n);
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    auto da = g.degree(a);
    auto db = g.degree(b);
    return da != db ? da < db : a < b;
  });
  for (NodeId i = 0; i < n; ++i) {
    rank[order[i]] = i;
  }

  // Forward lists: higher-ranked neighbors, sorted by rank.
  std::vector<std::vector<NodeId>> fwd(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (rank[v] > rank[u]) {
        fwd[u].push_back(v);
      }
    }
    std::sort(fwd[u].begin(), fwd[u].end(),
              [&](NodeId a, NodeId b) { return rank[a] < rank[b]; });
  }

  std::vector<std::uint64_t> tri(n, 0);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : fwd[u]) {
      // Intersect fwd[u] and fwd[v].
      auto it1 = fwd[u].begin();
      auto it2 = fwd[v].begin();
      while (it1 != fwd[u].end() && it2 != fwd[v].end()) {
        NodeId r1 = rank[*it1];
        NodeId r2 = rank[*it2];
        if (r1 == r2) {
          ++tri[u];
          ++tri[v];
          ++tri[*it1];
          ++it1;
          ++it2;
        } else if (r1 < r2) {
          ++it1;
        } else {
          ++it2;
        }
      }
    }
  }
  return tri;
}

}  // namespace

Distribution degree_distribution(const CompactGraph& g) {
  require_nodes(g, "degree_distribution");
  std::map<double, std::uint64_t> counts;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    ++counts[static_cast<double>(g.degree(u))];
  }
  return from_count_map(counts);
}

Distribution path_length_distribution(const CompactGraph& g,
                                      const PathLengthOptions& opts) {
  require_nodes(g, "path_length_distribution");
  std::size_t n = g.node_count();

  std::vector<NodeId> sources;
  if (n <= opts.exact_threshold || n <= opts.source_budget) {
    sources.resize(n);
    std::iota(sources.begin(), sources.end(), NodeId{0});
  } else {
    // Distinct uniform sources via a partial Fisher-Yates pass.
    std::vector<NodeId> ids(n);
    std::iota(ids.begin(), ids.end(), NodeId{0});
    Rng rng(opts.seed);
    for (std::size_t i = 0; i < opts.source_budget; ++i) {
      std::size_t j = i + rng.uniform_index(n - i);
      std::swap(ids[i], ids[j]);
    }
    sources.assign(ids.begin(),
                   ids.begin() + static_cast<std::ptrdiff_t>(opts.source_budget));
  }

  std::map<double, std::uint64_t> counts;
  std::vector<std::uint32_t> dist(n);
  constexpr std::uint32_t kUnreached = 0xffffffffu;
  std::vector<NodeId> frontier;
  for (NodeId s : sources) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    dist[s] = 0;
    frontier.assign(1, s);
    std::uint32_t depth = 0;
    while (!frontier.empty()) {
      ++depth;
      std::vector<NodeId> next;
      for (NodeId u : frontier) {
        for (NodeId v : g.neighbors(u)) {
          if (dist[v] == kUnreached) {
            dist[v] = depth;
            next.push_back(v);
            ++counts[static_cast<double>(depth)];
          }
        }
      }
      frontier = std::move(next);
    }
  }
  if (counts.empty()) {
    throw std::invalid_argument(
        "path_length_distribution: graph has no finite paths");
  }
  return from_count_map(counts);
}

Distribution clustering_distribution(const CompactGraph& g) {
  require_nodes(g, "clustering_distribution");
  std::vector<std::uint64_t> tri = local_triangles(g);
  std::map<double, std::uint64_t> counts;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    std::size_t d = g.degree(u);
    double c = 0.0;
    if (d >= 2) {
      c = 2.0 * static_cast<double>(tri[u]) /
          (static_cast<double>(d) * (static_cast<double>(d) - 1.0));
    }
    ++counts[c];
  }
  return from_count_map(counts);
}

Distribution wcc_size_distribution(const CompactGraph& g) {
  require_nodes(g, "wcc_size_distribution");
  std::size_t n = g.node_count();
  std::vector<bool> visited(n, false);
  std::map<double, std::uint64_t> counts;
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < n; ++s) {
    if (visited[s]) {
      continue;
    }
    std::uint64_t size = 0;
    visited[s] = true;
    stack.assign(1, s);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      ++size;
      for (NodeId v : g.neighbors(u)) {
        if (!visited[v]) {
          visited[v] = true;
          stack.push_back(v);
        }
      }
    }
    ++counts[static_cast<double>(size)];
  }
  return from_count_map(counts);
}

Distribution degree_distribution(const SampledGraph& g) {
  return degree_distribution(CompactGraph::from_graph(g));
}

Distribution path_length_distribution(const SampledGraph& g,
                                      const PathLengthOptions& opts) {
  return path_length_distribution(CompactGraph::from_graph(g), opts);
}

Distribution clustering_distribution(const SampledGraph& g) {
  return clustering_distribution(CompactGraph::from_graph(g));
}

Distribution wcc_size_distribution(const SampledGraph& g) {
  return wcc_size_distribution(CompactGraph::from_graph(g));
}

}  // namespace gss
