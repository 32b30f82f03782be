#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "gss/samplers.hpp"

namespace gss {
namespace detail {

void EdgeWindow::push(const Edge& e, std::uint64_t seq) {
  entries_.push_back(Entry{e, seq, true});
  incident_[e.u].insert(seq);
  incident_[e.v].insert(seq);
  ++alive_;
}

void EdgeWindow::expire_before(std::uint64_t min_seq) {
  while (!entries_.empty() && entries_.front().seq < min_seq) {
    Entry& front = entries_.front();
    if (front.alive) {
      unindex(front.e.u, front.seq);
      unindex(front.e.v, front.seq);
      --alive_;
    }
    entries_.pop_front();
  }
}

bool EdgeWindow::has_incident(NodeId u) const {
  auto it = incident_.find(u);
  return it != incident_.end() && !it->second.empty();
}

Edge EdgeWindow::take_incident(NodeId u, Rng& rng) {
  auto it = incident_.find(u);
  if (it == incident_.end() || it->second.empty()) {
    throw std::logic_error("take_incident: no window edges at node");
  }
  auto pick = it->second.begin();
  std::advance(pick, static_cast<std::ptrdiff_t>(
                         rng.uniform_index(it->second.size())));
  std::uint64_t seq = *pick;
  Entry& entry = entries_[seq - entries_.front().seq];
  entry.alive = false;
  unindex(entry.e.u, seq);
  unindex(entry.e.v, seq);
  --alive_;
  return entry.e;
}

NodeId EdgeWindow::random_vertex(Rng& rng) const {
  std::vector<NodeId> vertices;
  vertices.reserve(incident_.size());
  for (const auto& [node, seqs] : incident_) {
    if (!seqs.empty()) {
      vertices.push_back(node);
    }
  }
  if (vertices.empty()) {
    throw std::logic_error("random_vertex: empty window");
  }
  std::sort(vertices.begin(), vertices.end());
  return vertices[rng.uniform_index(vertices.size())];
}

void EdgeWindow::unindex(NodeId node, std::uint64_t seq) {
  auto it = incident_.find(node);
  it->second.erase(seq);
  if (it->second.empty()) {
    incident_.erase(it);
  }
}

}  // namespace detail

StreamingBfsSampler::StreamingBfsSampler(std::size_t n, std::size_t wsize,
                                         std::uint64_t seed)
    : target_n_(n), wsize_(wsize), rng_(seed) {
  if (n == 0) {
    throw std::invalid_argument("streaming_bfs: sample size must be >= 1");
  }
  if (wsize == 0) {
    throw std::invalid_argument("streaming_bfs: window size must be >= 1");
  }
}

void StreamingBfsSampler::consume(const Edge& e) {
  if (done_) {
    return;
  }
  ++t_;
  if (t_ <= wsize_) {
    window_.push(e, t_);
    if (t_ == wsize_) {
      choose_initial_focus();
    }
    record_state();
    return;
  }
  step_action();
  window_.push(e, t_);
  window_.expire_before(t_ - wsize_ + 1);
  check_budget();
  record_state();
}

void StreamingBfsSampler::finish() {
  if (done_) {
    return;
  }
  if (!have_focus_) {
    choose_initial_focus();  // stream was shorter than the window
  }
  // The stream is exhausted; keep burning within the residual window.
  while (!done_) {
    if (!step_action()) {
      break;
    }
    check_budget();
    record_state();
  }
  done_ = true;
}

void StreamingBfsSampler::choose_initial_focus() {
  if (!window_.empty()) {
    focus_ = window_.random_vertex(rng_);
    have_focus_ = true;
  }
}

// One burn-or-refocus action. Returns false when neither is possible.
bool StreamingBfsSampler::step_action() {
  if (!have_focus_) {
    return false;
  }
  sample_.add_node(focus_);
  if (window_.has_incident(focus_)) {
    Edge e = window_.take_incident(focus_, rng_);
    NodeId far = e.u == focus_ ? e.v : e.u;
    sample_.add_node(far);
    sample_.add_edge(e);
    burn_order_.push_back(e);
    queue_.push_back(far);
  } else if (!queue_.empty()) {
    focus_ = queue_.front();
    queue_.pop_front();
  } else if (!window_.empty()) {
    focus_ = window_.random_vertex(rng_);
  } else {
    return false;
  }
  return true;
}

void StreamingBfsSampler::check_budget() {
  if (sample_.node_count() > target_n_) {
    prune_to_budget();
    done_ = true;
  }
}

// Keep the earliest-burned prefix of edges whose endpoint union stays within
// the budget; the sample becomes that prefix and its endpoints.
void StreamingBfsSampler::prune_to_budget() {
  std::unordered_set<NodeId> seen;
  std::size_t keep = 0;
  for (const Edge& e : burn_order_) {
    std::size_t added =
        static_cast<std::size_t>(!seen.contains(e.u)) +
        static_cast<std::size_t>(!seen.contains(e.v));
    if (seen.size() + added > target_n_) {
      break;
    }
    seen.insert(e.u);
    seen.insert(e.v);
    ++keep;
  }
  SampledGraph pruned;
  for (std::size_t i = 0; i < keep; ++i) {
    const Edge& e = burn_order_[i];
    pruned.add_node(e.u);
    pruned.add_node(e.v);
    pruned.add_edge(e);
  }
  burn_order_.resize(keep);
  sample_ = std::move(pruned);
}

std::size_t StreamingBfsSampler::state_entries() const {
  return sample_.node_count() + sample_.edge_count() + window_.size() +
         queue_.size();
}

}  // namespace gss
