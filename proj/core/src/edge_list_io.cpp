#include "gss/edge_list_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>

namespace gss {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool parse_u64(std::string_view token, std::uint64_t& out) {
  token = trim(token);
  if (token.empty()) {
    return false;
  }
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

// Splits a data line into exactly two integer tokens.
bool split_line(std::string_view line, EdgeListFormat format,
                std::uint64_t& a, std::uint64_t& b) {
  if (format == EdgeListFormat::kCsv) {
    std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) {
      return false;
    }
    std::string_view rest = line.substr(comma + 1);
    if (rest.find(',') != std::string_view::npos) {
      return false;
    }
    return parse_u64(line.substr(0, comma), a) && parse_u64(rest, b);
  }
  std::istringstream iss{std::string(line)};
  std::string ta, tb, extra;
  if (!(iss >> ta >> tb)) {
    return false;
  }
  if (iss >> extra) {
    return false;
  }
  return parse_u64(ta, a) && parse_u64(tb, b);
}

}  // namespace

EdgeListFormat edge_list_format_from_string(const std::string& s) {
  if (s == "whitespace") return EdgeListFormat::kWhitespace;
  if (s == "csv") return EdgeListFormat::kCsv;
  throw std::invalid_argument("unknown edge-list format: " + s);
}

ParseError::ParseError(const std::string& what, std::size_t line_number)
    : std::runtime_error(what + " (line " + std::to_string(line_number) + ")"),
      line(line_number) {}

IngestedGraph ingest_edge_list(const std::filesystem::path& path,
                               EdgeListFormat format) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open edge list: " + path.string());
  }

  IngestedGraph g;
  std::unordered_map<std::uint64_t, NodeId> dense_id;
  std::set<Edge> edges;
  std::string line;
  std::size_t line_number = 0;

  auto remap = [&](std::uint64_t original) {
    auto [it, inserted] =
        dense_id.try_emplace(original, static_cast<NodeId>(dense_id.size()));
    if (inserted) {
      g.original_ids.push_back(original);
    }
    return it->second;
  };

  while (std::getline(in, line)) {
    ++line_number;
    std::string_view sv = trim(line);
    if (sv.empty() || sv.front() == '#' || sv.front() == '%') {
      continue;
    }
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    if (!split_line(sv, format, a, b)) {
      throw ParseError("malformed edge line: '" + std::string(sv) + "'",
                       line_number);
    }
    NodeId u = remap(a);
    NodeId v = remap(b);
    if (u == v) {
      continue;  // self-loop dropped
    }
    edges.insert(Edge::of(u, v));
  }
  if (in.bad()) {
    throw std::runtime_error("I/O error while reading: " + path.string());
  }

  g.node_count = dense_id.size();
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

void write_edge_list(const std::filesystem::path& path,
                     const std::vector<Edge>& edges,
                     const std::vector<std::uint64_t>& original_ids) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path.string());
  }
  for (const Edge& e : edges) {
    if (original_ids.empty()) {
      out << e.u << ' ' << e.v << '\n';
    } else {
      out << original_ids.at(e.u) << ' ' << original_ids.at(e.v) << '\n';
    }
  }
  if (!out) {
    throw std::runtime_error("I/O error while writing: " + path.string());
  }
}

}  // namespace gss
