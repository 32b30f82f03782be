#include "gss/summary.hpp"

#include <sstream>

#include <json.hpp>

namespace gss {

GraphSummary summarize(const CompactGraph& g, const PathLengthOptions& opts) {
  GraphSummary s;
  s.nodes = g.node_count();
  s.edges = g.edge_count();
  if (s.nodes == 0) {
    return s;
  }
  s.num_weakly_connected_components =
      wcc_size_distribution(g).sample_count();
  if (s.nodes >= 2) {
    s.density = 2.0 * static_cast<double>(s.edges) /
                (static_cast<double>(s.nodes) *
                 (static_cast<double>(s.nodes) - 1.0));
  }
  s.avg_clustering = clustering_distribution(g).mean();
  if (s.edges > 0) {
    s.avg_path_length = path_length_distribution(g, opts).mean();
  }
  return s;
}

std::string to_json(const GraphSummary& s) {
  nlohmann::ordered_json j;
  j["nodes"] = s.nodes;
  j["edges"] = s.edges;
  j["num_weakly_connected_components"] = s.num_weakly_connected_components;
  j["avg_path_length"] = s.avg_path_length;
  j["density"] = s.density;
  j["avg_clustering"] = s.avg_clustering;
  return j.dump(2);
}

}  // namespace gss
