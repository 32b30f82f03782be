#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "gss/graph.hpp"

namespace gss {

enum class EdgeListFormat { kWhitespace, kCsv };

EdgeListFormat edge_list_format_from_string(const std::string& s);

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t line_number);
  std::size_t line = 0;
};

// Simplified graph read from an edge-list file: node ids remapped to the
// dense range [0, N) in first-seen order, self-loops dropped, duplicate
// undirected edges collapsed.
struct IngestedGraph {
  std::size_t node_count = 0;
  std::vector<Edge> edges;                  // canonical, sorted
  std::vector<std::uint64_t> original_ids;  // dense id -> file id
};

// Lines hold two integer tokens separated by whitespace or a comma; lines
// starting with '#' or '%' are comments and blank lines are skipped.
IngestedGraph ingest_edge_list(const std::filesystem::path& path,
                               EdgeListFormat format = EdgeListFormat::kWhitespace);

// Writes one edge per line in the same text format ingestion reads. When an
// original-id mapping is given, dense ids are translated back through it.
void write_edge_list(const std::filesystem::path& path,
                     const std::vector<Edge>& edges,
                     const std::vector<std::uint64_t>& original_ids = {});

}  // namespace gss
