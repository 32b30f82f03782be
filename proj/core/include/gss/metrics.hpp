#pragma once

#include <cstddef>
#include <cstdint>

#include "gss/compact_graph.hpp"
#include "gss/distribution.hpp"
#include "gss/graph.hpp"

namespace gss {

struct PathLengthOptions {
  // All-pairs BFS when node count <= exact_threshold, otherwise hop counts
  // are estimated from source_budget uniformly sampled BFS sources.
  std::size_t source_budget = 1000;
  std::size_t exact_threshold = 5000;
  std::uint64_t seed = 0x9d2c5680;
};

// Distribution of node degrees; isolated nodes contribute degree 0.
// Throws std::invalid_argument on an empty graph.
Distribution degree_distribution(const CompactGraph& g);

// Distribution of shortest-path hop counts over reachable ordered pairs;
// unreachable pairs are excluded. Throws std::invalid_argument when the
// graph has no nodes or no finite paths (no edges).
Distribution path_length_distribution(const CompactGraph& g,
                                      const PathLengthOptions& opts = {});

// Distribution of local clustering coefficients
// c(v) = 2 * tri(v) / (deg(v) * (deg(v) - 1)); nodes with degree < 2 are
// included with c = 0, which keeps sampled-graph comparisons honest about
// unclustered low-degree mass. Throws std::invalid_argument on an empty
// graph.
Distribution clustering_distribution(const CompactGraph& g);

// Distribution of weakly-connected-component sizes (node counts); isolated
// nodes are size-1 components. Throws std::invalid_argument on an empty
// graph.
Distribution wcc_size_distribution(const CompactGraph& g);

// Conveniences over an adjacency-set graph.
Distribution degree_distribution(const SampledGraph& g);
Distribution path_length_distribution(const SampledGraph& g,
                                      const PathLengthOptions& opts = {});
Distribution clustering_distribution(const SampledGraph& g);
Distribution wcc_size_distribution(const SampledGraph& g);

}  // namespace gss
