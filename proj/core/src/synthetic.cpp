#include "gss/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "gss/rng.hpp"

namespace gss {

namespace {

std::vector<Edge> erdos_renyi(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u + 1 < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (p >= 1.0 || rng.uniform01() < p) {
        edges.push_back(Edge{u, v});
      }
    }
  }
  return edges;
}

std::vector<Edge> preferential_attachment(std::size_t n, std::size_t m,
                                          Rng& rng) {
  std::vector<Edge> edges;
  edges.reserve(m * (n - m) + m * (m - 1) / 2);

  // Every stored edge contributes both endpoints to the pool, so a uniform
  // pool draw is a degree-proportional node draw.
  std::vector<NodeId> pool;
  for (NodeId i = 0; i + 1 < m; ++i) {
    for (NodeId j = i + 1; j < m; ++j) {
      edges.push_back(Edge{i, j});
      pool.push_back(i);
      pool.push_back(j);
    }
  }

  std::vector<NodeId> targets;
  for (NodeId v = static_cast<NodeId>(m); v < n; ++v) {
    std::unordered_set<NodeId> picked;
    while (picked.size() < m) {
      NodeId t;
      if (pool.empty()) {
        // m == 1 bootstrap: the first attachment has no pool yet.
        t = static_cast<NodeId>(rng.uniform_below(v));
      } else {
        t = pool[rng.uniform_index(pool.size())];
      }
      if (t != v) {
        picked.insert(t);
      }
    }
    targets.assign(picked.begin(), picked.end());
    std::sort(targets.begin(), targets.end());
    for (NodeId t : targets) {
      edges.push_back(Edge::of(v, t));
      pool.push_back(v);
      pool.push_back(t);
    }
  }
  return edges;
}

}  // namespace

std::vector<Edge> generate_synthetic(SyntheticModel model, std::size_t n,
                                     double param, std::uint64_t seed) {
  if (n < 2) {
    throw std::invalid_argument("generate_synthetic: n must be >= 2");
  }
  Rng rng(seed);
  switch (model) {
    case SyntheticModel::kErdosRenyi: {
      if (!(param > 0.0 && param <= 1.0)) {
        throw std::invalid_argument(
            "erdos_renyi: edge probability must be in (0, 1]");
      }
      return erdos_renyi(n, param, rng);
    }
    case SyntheticModel::kPreferentialAttachment: {
      double rounded = std::round(param);
      if (param != rounded || rounded < 1.0 ||
          static_cast<std::size_t>(rounded) >= n) {
        throw std::invalid_argument(
            "preferential_attachment: m must be an integer in [1, n)");
      }
      return preferential_attachment(n, static_cast<std::size_t>(rounded),
                                     rng);
    }
  }
  throw std::invalid_argument("generate_synthetic: unknown model");
}

}  // namespace gss
