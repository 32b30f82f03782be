#pragma once

#include <cstddef>
#include <string>

#include "gss/compact_graph.hpp"
#include "gss/metrics.hpp"

namespace gss {

// Dataset characteristics: counts, component structure, density, average
// local clustering, and average shortest-path length over reachable pairs
// (within components; unreachable pairs excluded).
struct GraphSummary {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t num_weakly_connected_components = 0;
  double avg_path_length = 0.0;
  double density = 0.0;
  double avg_clustering = 0.0;
};

GraphSummary summarize(const CompactGraph& g, const PathLengthOptions& opts = {});

std::string to_json(const GraphSummary& s);

}  // namespace gss
