#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "gss/compact_graph.hpp"
#include "gss/graph.hpp"
#include "gss/hashing.hpp"
#include "gss/min_hash_reservoir.hpp"
#include "gss/rng.hpp"
#include "gss/stream.hpp"

namespace gss {

// Raised by edge sampling when the final reservoir covers fewer than the
// requested number of nodes.
struct UndersizedReservoirError : std::runtime_error {
  UndersizedReservoirError(std::size_t achieved, std::size_t target);
  std::size_t achieved_nodes = 0;
  std::size_t target_nodes = 0;
};

// One-pass sampler contract: edges arrive through consume() exactly once and
// in stream order; total auxiliary state stays proportional to the sampled
// graph (plus the fixed window for the BFS variant). snapshot() returns the
// deliverable sample at the current position without perturbing the sampler.
class StreamSampler {
 public:
  virtual ~StreamSampler() = default;

  virtual void consume(const Edge& e) = 0;

  // True once the sampler will ignore further input (BFS after it fills its
  // node budget); the driver stops feeding edges.
  virtual bool done() const { return false; }

  // Called when the stream is exhausted; performs any end-of-stream work
  // (window drain, reservoir pruning checks). Idempotent.
  virtual void finish() {}

  virtual const SampledGraph& current() const = 0;
  virtual SampledGraph snapshot() const = 0;

  // Logical entries held right now: sample nodes + sample edges + auxiliary
  // structures (reservoir entries, window edges, queue slots, resident
  // array).
  virtual std::size_t state_entries() const = 0;

  std::size_t peak_state_entries() const { return peak_state_; }

 protected:
  void record_state() {
    std::size_t s = state_entries();
    if (s > peak_state_) peak_state_ = s;
  }

  std::size_t peak_state_ = 0;
};

// Streaming node sampling: keeps the n nodes with the smallest hash values
// seen so far; replacing a node removes its incident sample edges; an edge is
// stored iff both endpoints are resident when it arrives.
class StreamingNodeSampler : public StreamSampler {
 public:
  StreamingNodeSampler(std::size_t n, std::uint64_t seed);

  void consume(const Edge& e) override;
  const SampledGraph& current() const override { return sample_; }
  SampledGraph snapshot() const override { return sample_; }
  std::size_t state_entries() const override;

  std::uint64_t hash_salt() const { return salt_; }

 private:
  void admit(NodeId w);

  std::size_t target_n_;
  std::uint64_t salt_;
  MinHashReservoir<NodeId> reservoir_;
  SampledGraph sample_;
};

// Streaming edge sampling: keeps the m edges with the smallest hash values;
// the deliverable sample prunes edges in descending hash order until the node
// count first reaches <= n. Nodes are endpoints of retained edges, so the
// sample carries no isolated nodes.
class StreamingEdgeSampler : public StreamSampler {
 public:
  // reservoir_edges == 0 selects the default m = 4 * n.
  StreamingEdgeSampler(std::size_t n, std::size_t reservoir_edges,
                       std::uint64_t seed);

  void consume(const Edge& e) override;
  void finish() override;
  const SampledGraph& current() const override { return sample_; }
  SampledGraph snapshot() const override;
  std::size_t state_entries() const override;

  std::size_t reservoir_capacity() const { return reservoir_.capacity(); }
  std::uint64_t hash_salt() const { return salt_; }

 private:
  std::size_t target_n_;
  std::uint64_t salt_;
  MinHashReservoir<Edge, EdgeHash> reservoir_;
  SampledGraph sample_;
};

namespace detail {

// FIFO window over the most recent wsize unsampled stream edges with an
// incidence index for burn lookups.
class EdgeWindow {
 public:
  void push(const Edge& e, std::uint64_t seq);
  void expire_before(std::uint64_t min_seq);

  bool empty() const { return alive_ == 0; }
  std::size_t size() const { return alive_; }
  bool has_incident(NodeId u) const;

  // Uniform pick among u's window edges; removes the picked edge.
  Edge take_incident(NodeId u, Rng& rng);

  // Uniform pick over the distinct vertices currently present in the window.
  NodeId random_vertex(Rng& rng) const;

 private:
  struct Entry {
    Edge e;
    std::uint64_t seq;
    bool alive;
  };

  void unindex(NodeId node, std::uint64_t seq);

  std::deque<Entry> entries_;  // ascending seq
  std::unordered_map<NodeId, std::set<std::uint64_t>> incident_;
  std::size_t alive_ = 0;
};

}  // namespace detail

// Streaming BFS over a sliding window: burns one window edge incident to the
// current focus node per stream step, enqueueing the far endpoint; refocuses
// from the queue or jumps to a random window vertex when stuck. The window
// advances one edge per stream step; once the stream ends the remaining
// window is drained the same way. Stops as soon as the node budget is
// exceeded, retaining the earliest-burned prefix of edges whose endpoints
// cover at most n nodes.
class StreamingBfsSampler : public StreamSampler {
 public:
  StreamingBfsSampler(std::size_t n, std::size_t wsize, std::uint64_t seed);

  void consume(const Edge& e) override;
  bool done() const override { return done_; }
  void finish() override;
  const SampledGraph& current() const override { return sample_; }
  SampledGraph snapshot() const override { return sample_; }
  std::size_t state_entries() const override;

 private:
  void choose_initial_focus();
  bool step_action();
  void check_budget();
  void prune_to_budget();

  std::size_t target_n_;
  std::size_t wsize_;
  Rng rng_;
  detail::EdgeWindow window_;
  std::deque<NodeId> queue_;
  std::vector<Edge> burn_order_;
  SampledGraph sample_;
  std::uint64_t t_ = 0;
  NodeId focus_ = 0;
  bool have_focus_ = false;
  bool done_ = false;
};

// Partially-induced edge sampling: the first edges fill the node reservoir to
// n; afterwards each arriving edge triggers, with probability |E_s|/t, the
// insertion of its unseen endpoints by evicting uniform residents (together
// with their incident sample edges). Every arriving edge is stored iff both
// endpoints are resident after that step's replacements, which induces the
// sample in the forward direction only.
class PiesSampler : public StreamSampler {
 public:
  PiesSampler(std::size_t n, std::uint64_t seed);

  void consume(const Edge& e) override;
  const SampledGraph& current() const override { return sample_; }
  SampledGraph snapshot() const override { return sample_; }
  std::size_t state_entries() const override;

  std::size_t resident_count() const { return residents_.size(); }

 private:
  bool resident(NodeId u) const { return slot_of_.contains(u); }
  void insert_node(NodeId u);
  void evict_node(NodeId u);

  std::size_t target_n_;
  Rng rng_;
  std::vector<NodeId> residents_;  // uniform slot draws; swap-remove
  std::unordered_map<NodeId, std::size_t> slot_of_;
  SampledGraph sample_;
  std::uint64_t t_ = 0;
};

// Drives a sampler over the remainder of a stream and finalizes it.
SampledGraph run_sampler(StreamSampler& sampler, StreamSource& stream);

// One-call forms of the four streaming algorithms.
SampledGraph streaming_ns(StreamSource& stream, std::size_t n,
                          std::uint64_t seed);
SampledGraph streaming_es(StreamSource& stream, std::size_t n, std::size_t m,
                          std::uint64_t seed);
SampledGraph streaming_bfs(StreamSource& stream, std::size_t n,
                           std::size_t wsize, std::uint64_t seed);
SampledGraph pies(StreamSource& stream, std::size_t n, std::uint64_t seed);

// Number of neighbors a node burns in forest fire sampling: geometric count
// of successes at probability p_f (mean p_f / (1 - p_f)).
std::size_t geometric_burn_count(Rng& rng, double p_f);

// Forest fire sampling over a fully accessible graph: from a uniform seed
// node, burn a geometric number of unvisited neighbors, recurse on burned
// nodes, and restart from a fresh uniform node when the fire dies; stops at n
// burned nodes. The sample holds the burned nodes and the traversed edges.
// first_seed pins the initial seed node (tests); later restarts stay uniform.
SampledGraph offline_ffs(const CompactGraph& g, std::size_t n, double p_f,
                         std::uint64_t seed,
                         std::optional<NodeId> first_seed = std::nullopt);

// Edge sampling with full induction: draw edges uniformly without replacement
// until the accumulated node set reaches n (edges that would overshoot the
// budget are discarded), then include every graph edge with both endpoints in
// the node set.
SampledGraph offline_es_induced(const CompactGraph& g, std::size_t n,
                                std::uint64_t seed);

}  // namespace gss
