#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "gss/samplers.hpp"

namespace gss {

std::size_t geometric_burn_count(Rng& rng, double p_f) {
  std::size_t count = 0;
  while (rng.uniform01() < p_f) {
    ++count;
  }
  return count;
}

namespace {

// Uniform draws over a shrinking node pool: swap-remove keeps every draw
// O(1) and uniform over the remaining nodes.
class NodePool {
 public:
  explicit NodePool(std::size_t n) : nodes_(n), slot_of_(n) {
    std::iota(nodes_.begin(), nodes_.end(), NodeId{0});
    std::iota(slot_of_.begin(), slot_of_.end(), std::size_t{0});
  }

  bool empty() const { return nodes_.empty(); }

  NodeId draw(Rng& rng) const { return nodes_[rng.uniform_index(nodes_.size())]; }

  void remove(NodeId u) {
    std::size_t slot = slot_of_[u];
    NodeId last = nodes_.back();
    nodes_.pop_back();
    if (last != u) {
      nodes_[slot] = last;
      slot_of_[last] = slot;
    }
  }

 private:
  std::vector<NodeId> nodes_;
  std::vector<std::size_t> slot_of_;
};

}  // namespace

SampledGraph offline_ffs(const CompactGraph& g, std::size_t n, double p_f,
                         std::uint64_t seed,
                         std::optional<NodeId> first_seed) {
  if (n == 0) {
    throw std::invalid_argument("offline_ffs: sample size must be >= 1");
  }
  if (!(p_f > 0.0 && p_f < 1.0)) {
    throw std::invalid_argument("offline_ffs: p_f must be in (0, 1)");
  }
  Rng rng(seed);
  SampledGraph sample;
  std::vector<bool> burned(g.node_count(), false);
  NodePool fresh(g.node_count());
  std::size_t target = std::min(n, g.node_count());
  std::deque<NodeId> front;
  std::vector<NodeId> candidates;

  auto burn = [&](NodeId u) {
    burned[u] = true;
    fresh.remove(u);
    sample.add_node(u);
    front.push_back(u);
  };

  bool first_fire = true;
  while (sample.node_count() < target && !fresh.empty()) {
    NodeId seed_node = (first_fire && first_seed) ? *first_seed : fresh.draw(rng);
    first_fire = false;
    burn(seed_node);
    while (!front.empty() && sample.node_count() < target) {
      NodeId x = front.front();
      front.pop_front();
      std::size_t want = geometric_burn_count(rng, p_f);
      if (want == 0) {
        continue;
      }
      candidates.clear();
      for (NodeId y : g.neighbors(x)) {
        if (!burned[y]) {
          candidates.push_back(y);
        }
      }
      fisher_yates_shuffle(candidates, rng);
      std::size_t take = std::min(want, candidates.size());
      for (std::size_t k = 0; k < take && sample.node_count() < target; ++k) {
        NodeId y = candidates[k];
        burn(y);
        sample.add_edge(Edge::of(x, y));
      }
    }
    front.clear();  // fire died (or budget hit); restart from a fresh node
  }
  return sample;
}

SampledGraph offline_es_induced(const CompactGraph& g, std::size_t n,
                                std::uint64_t seed) {
  if (n == 0) {
    throw std::invalid_argument("offline_es_induced: sample size must be >= 1");
  }
  Rng rng(seed);
  std::vector<Edge> edges = g.edge_list();
  fisher_yates_shuffle(edges, rng);

  SampledGraph sample;
  std::size_t target = std::min(n, g.node_count());
  for (const Edge& e : edges) {
    if (sample.node_count() >= target) {
      break;
    }
    std::size_t added = static_cast<std::size_t>(!sample.has_node(e.u)) +
                        static_cast<std::size_t>(!sample.has_node(e.v));
    if (sample.node_count() + added > target) {
      continue;  // drawing this edge would overshoot the budget
    }
    sample.add_node(e.u);
    sample.add_node(e.v);
  }

  // Full induction: every graph edge among the sampled nodes.
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (!sample.has_node(u)) {
      continue;
    }
    for (NodeId v : g.neighbors(u)) {
      if (u < v && sample.has_node(v)) {
        sample.add_edge(Edge{u, v});
      }
    }
  }
  return sample;
}

}  // namespace gss
