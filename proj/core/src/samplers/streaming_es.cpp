#include <stdexcept>
#include <utility>

#include "gss/samplers.hpp"

namespace gss {

StreamingEdgeSampler::StreamingEdgeSampler(std::size_t n,
                                           std::size_t reservoir_edges,
                                           std::uint64_t seed)
    : target_n_(n),
      salt_(seed),
      reservoir_(reservoir_edges == 0 ? 4 * n : reservoir_edges) {
  if (n == 0) {
    throw std::invalid_argument("streaming_es: sample size must be >= 1");
  }
}

void StreamingEdgeSampler::consume(const Edge& e) {
  auto result = reservoir_.offer(e, uniform_edge_hash(e, salt_));
  if (result.status == decltype(reservoir_)::Offer::kAdmitted) {
    sample_.add_node(e.u);
    sample_.add_node(e.v);
    sample_.add_edge(e);
    if (result.evicted) {
      const Edge& out = *result.evicted;
      sample_.remove_edge(out);
      // Nodes exist only as endpoints of retained edges.
      if (sample_.degree(out.u) == 0) sample_.remove_node(out.u);
      if (sample_.degree(out.v) == 0) sample_.remove_node(out.v);
    }
  }
  record_state();
}

void StreamingEdgeSampler::finish() {
  if (sample_.node_count() < target_n_) {
    throw UndersizedReservoirError(sample_.node_count(), target_n_);
  }
}

SampledGraph StreamingEdgeSampler::snapshot() const {
  SampledGraph g = sample_;
  if (g.node_count() <= target_n_) {
    return g;
  }
  // Drop edges in descending hash order until the node count first reaches
  // <= n; a step that lands below n is still applied.
  auto items = reservoir_.items_by_hash();
  for (auto it = items.rbegin();
       it != items.rend() && g.node_count() > target_n_; ++it) {
    const Edge& e = it->first;
    g.remove_edge(e);
    if (g.degree(e.u) == 0) g.remove_node(e.u);
    if (g.degree(e.v) == 0) g.remove_node(e.v);
  }
  return g;
}

std::size_t StreamingEdgeSampler::state_entries() const {
  return sample_.node_count() + sample_.edge_count() + reservoir_.size();
}

}  // namespace gss
