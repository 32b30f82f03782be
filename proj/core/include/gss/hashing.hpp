#pragma once

#include <cstdint>

#include "gss/graph.hpp"

namespace gss {

// 64-bit finalizer with full avalanche (splitmix64 style).
std::uint64_t mix64(std::uint64_t x);

// Deterministic uniform hash of (key, salt) into [0, 1). A fixed salt gives a
// fixed hash function; varying the salt per run decorrelates runs.
double uniform_hash(std::uint64_t key, std::uint64_t salt);

// Hash of an undirected edge under its canonical orientation.
double uniform_edge_hash(const Edge& e, std::uint64_t salt);

}  // namespace gss
