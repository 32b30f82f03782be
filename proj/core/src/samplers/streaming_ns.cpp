#include <stdexcept>

#include "gss/samplers.hpp"

namespace gss {

StreamingNodeSampler::StreamingNodeSampler(std::size_t n, std::uint64_t seed)
    : target_n_(n), salt_(seed), reservoir_(n) {
  if (n == 0) {
    throw std::invalid_argument("streaming_ns: sample size must be >= 1");
  }
}

void StreamingNodeSampler::consume(const Edge& e) {
  admit(e.u);
  admit(e.v);
  if (sample_.has_node(e.u) && sample_.has_node(e.v)) {
    sample_.add_edge(e);
  }
  record_state();
}

void StreamingNodeSampler::admit(NodeId w) {
  if (reservoir_.contains(w)) {
    return;
  }
  auto result = reservoir_.offer(w, uniform_hash(w, salt_));
  if (result.status != decltype(reservoir_)::Offer::kAdmitted) {
    return;
  }
  sample_.add_node(w);
  if (result.evicted) {
    // The replaced node's edges can never be sampled again.
    sample_.remove_node(*result.evicted);
  }
}

std::size_t StreamingNodeSampler::state_entries() const {
  return sample_.node_count() + sample_.edge_count() + reservoir_.size();
}

}  // namespace gss
