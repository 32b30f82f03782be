#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gss/graph.hpp"

namespace gss {

enum class SyntheticModel { kPreferentialAttachment, kErdosRenyi };

// Seeded generators for simple undirected test graphs.
//
// Preferential attachment: a clique on the first m nodes, then every new node
// attaches to m distinct existing nodes chosen proportionally to degree.
// Total edges = C(m,2) + m*(n-m); degrees are heavy tailed.
//
// Erdos-Renyi: each of the C(n,2) pairs is an edge independently with
// probability p in (0, 1].
//
// For preferential attachment `param` is m (integral, 1 <= m < n); for
// Erdos-Renyi it is p. n >= 2 in both cases. Invalid parameters throw
// std::invalid_argument.
std::vector<Edge> generate_synthetic(SyntheticModel model, std::size_t n,
                                     double param, std::uint64_t seed);

}  // namespace gss
