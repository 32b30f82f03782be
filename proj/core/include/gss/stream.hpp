#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gss/graph.hpp"

namespace gss {

// Replayable edge sequence in a fixed permuted order with a position counter.
// Consumers see each edge exactly once per pass through next(); there is no
// random access. reads() counts every edge handed out, which lets tests
// verify single-pass execution.
class StreamSource {
 public:
  StreamSource() = default;
  explicit StreamSource(std::vector<Edge> edges) : edges_(std::move(edges)) {}

  bool has_next() const { return pos_ < edges_.size(); }

  const Edge& next() {
    ++reads_;
    return edges_[pos_++];
  }

  // Edges consumed so far; the 1-based stream index t of the last edge.
  std::uint64_t position() const { return pos_; }
  std::uint64_t size() const { return edges_.size(); }
  std::uint64_t reads() const { return reads_; }

  void reset() {
    pos_ = 0;
    reads_ = 0;
  }

  // Underlying permuted order (used for stream-prefix reference graphs).
  std::span<const Edge> edges() const { return edges_; }

 private:
  std::vector<Edge> edges_;
  std::uint64_t pos_ = 0;
  std::uint64_t reads_ = 0;
};

// Uniform Fisher-Yates permutation of the edge sequence under a seeded
// generator; the same seed always yields the same order.
StreamSource permute_stream(std::vector<Edge> edges, std::uint64_t seed);

}  // namespace gss
