#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <vector>

#include "gss/compact_graph.hpp"
#include "gss/metrics.hpp"
#include "gss/synthetic.hpp"

using namespace gss;

TEST_CASE("erdos_renyi with p=1 is the complete graph") {
  auto edges = generate_synthetic(SyntheticModel::kErdosRenyi, 4, 1.0, 1);
  CHECK(edges.size() == 6);
}

TEST_CASE("erdos_renyi edge count is within 3 sigma of the binomial mean") {
  // C(200,2) * 0.05 = 995, sigma = sqrt(995 * 0.95) ~ 30.75.
  auto edges = generate_synthetic(SyntheticModel::kErdosRenyi, 200, 0.05, 77);
  double mean = 995.0;
  double sigma = std::sqrt(19900.0 * 0.05 * 0.95);
  CHECK(std::abs(static_cast<double>(edges.size()) - mean) <= 3.0 * sigma);
}

TEST_CASE("preferential attachment edge count is exact") {
  // C(3,2) + 3 * (1000 - 3) = 3 + 2991.
  auto edges = generate_synthetic(SyntheticModel::kPreferentialAttachment,
                                  1000, 3, 4242);
  CHECK(edges.size() == 2994);
}

TEST_CASE("preferential attachment yields heavy-tailed degrees") {
  auto edges = generate_synthetic(SyntheticModel::kPreferentialAttachment,
                                  1000, 3, 8);
  CompactGraph g = CompactGraph::from_edges(1000, edges);
  std::size_t min_deg = g.node_count();
  std::size_t max_deg = 0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    min_deg = std::min(min_deg, g.degree(u));
    max_deg = std::max(max_deg, g.degree(u));
  }
  CHECK(min_deg == 3);
  CHECK(max_deg > 30);
}

TEST_CASE("preferential attachment with m=1 builds a tree") {
  auto edges = generate_synthetic(SyntheticModel::kPreferentialAttachment,
                                  50, 1, 3);
  CHECK(edges.size() == 49);
  CompactGraph g = CompactGraph::from_edges(50, edges);
  CHECK(wcc_size_distribution(g).sample_count() == 1);
}

TEST_CASE("generators are deterministic per seed") {
  auto a = generate_synthetic(SyntheticModel::kPreferentialAttachment, 300, 2,
                              10);
  auto b = generate_synthetic(SyntheticModel::kPreferentialAttachment, 300, 2,
                              10);
  CHECK(a == b);
  auto c = generate_synthetic(SyntheticModel::kErdosRenyi, 100, 0.1, 5);
  auto d = generate_synthetic(SyntheticModel::kErdosRenyi, 100, 0.1, 5);
  CHECK(c == d);
}

TEST_CASE("invalid generator parameters are rejected") {
  CHECK_THROWS_AS(generate_synthetic(SyntheticModel::kErdosRenyi, 1, 0.5, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_synthetic(SyntheticModel::kErdosRenyi, 10, 0.0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_synthetic(SyntheticModel::kErdosRenyi, 10, 1.5, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      generate_synthetic(SyntheticModel::kPreferentialAttachment, 10, 0, 1),
      std::invalid_argument);
  CHECK_THROWS_AS(
      generate_synthetic(SyntheticModel::kPreferentialAttachment, 10, 10, 1),
      std::invalid_argument);
  CHECK_THROWS_AS(
      generate_synthetic(SyntheticModel::kPreferentialAttachment, 10, 2.5, 1),
      std::invalid_argument);
}
