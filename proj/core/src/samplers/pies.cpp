#include <stdexcept>

#include "gss/samplers.hpp"

namespace gss {

PiesSampler::PiesSampler(std::size_t n, std::uint64_t seed)
    : target_n_(n), rng_(seed) {
  if (n == 0) {
    throw std::invalid_argument("pies: sample size must be >= 1");
  }
  residents_.reserve(n);
}

void PiesSampler::consume(const Edge& e) {
  ++t_;
  if (residents_.size() < target_n_) {
    // Reservoir-filling phase: admit endpoints while the budget allows.
    if (!resident(e.u) && residents_.size() < target_n_) {
      insert_node(e.u);
    }
    if (!resident(e.v) && residents_.size() < target_n_) {
      insert_node(e.v);
    }
  } else {
    double p_e =
        static_cast<double>(sample_.edge_count()) / static_cast<double>(t_);
    if (rng_.uniform01() <= p_e) {
      // Membership and eviction slots refer to the pre-step resident array,
      // so a node inserted within this step is never evicted by it.
      bool u_new = !resident(e.u);
      bool v_new = !resident(e.v);
      std::size_t i = rng_.uniform_index(residents_.size());
      std::size_t j = rng_.uniform_index(residents_.size());
      if (u_new && v_new) {
        while (j == i) {
          j = rng_.uniform_index(residents_.size());
        }
      }
      NodeId evict_for_u = residents_[i];
      NodeId evict_for_v = residents_[j];
      if (u_new) {
        evict_node(evict_for_u);
        insert_node(e.u);
      }
      if (v_new) {
        evict_node(evict_for_v);
        insert_node(e.v);
      }
    }
  }
  // Forward partial induction: keep the edge iff both endpoints are resident
  // after this step's replacements.
  if (resident(e.u) && resident(e.v)) {
    sample_.add_edge(e);
  }
  record_state();
}

void PiesSampler::insert_node(NodeId u) {
  sample_.add_node(u);
  slot_of_.emplace(u, residents_.size());
  residents_.push_back(u);
}

void PiesSampler::evict_node(NodeId u) {
  sample_.remove_node(u);
  auto it = slot_of_.find(u);
  std::size_t slot = it->second;
  slot_of_.erase(it);
  NodeId last = residents_.back();
  residents_.pop_back();
  if (last != u) {
    residents_[slot] = last;
    slot_of_[last] = slot;
  }
}

std::size_t PiesSampler::state_entries() const {
  return sample_.node_count() + sample_.edge_count() + residents_.size();
}

}  // namespace gss
