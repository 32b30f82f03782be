#include <doctest.h>

#include <stdexcept>

#include <vector>

#include "gss/compact_graph.hpp"
#include "gss/metrics.hpp"
#include "gss/rng.hpp"
#include "gss/synthetic.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace gss;

namespace {

CompactGraph compact(std::initializer_list<std::pair<NodeId, NodeId>> edges) {
  return CompactGraph::from_graph(testing::graph_from_edges(edges));
}

const CompactGraph kTriangle = compact({{0, 1}, {1, 2}, {0, 2}});
const CompactGraph kStar13 = compact({{0, 1}, {0, 2}, {0, 3}});
const CompactGraph kPath3 = compact({{0, 1}, {1, 2}});

}  // namespace

TEST_CASE("degree distribution on small graphs") {
  Distribution tri = degree_distribution(kTriangle);
  CHECK(tri.size() == 1);
  CHECK(tri.support()[0] == 2.0);

  Distribution star = degree_distribution(kStar13);
  CHECK(star.support()[0] == 1.0);
  CHECK(star.pdf()[0] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(star.support()[1] == 3.0);
  CHECK(star.pdf()[1] == doctest::Approx(0.25).epsilon(1e-12));

  SampledGraph with_isolated = testing::graph_from_edges({{0, 1}});
  with_isolated.add_node(9);
  Distribution d = degree_distribution(with_isolated);
  CHECK(d.support()[0] == 0.0);  // isolated nodes count as degree 0
}

TEST_CASE("degree distribution of a preferential-attachment graph") {
  auto edges = generate_synthetic(SyntheticModel::kPreferentialAttachment,
                                  1000, 3, 21);
  Distribution d =
      degree_distribution(CompactGraph::from_edges(1000, edges));
  CHECK(d.support()[0] == 3.0);                 // min degree is m
  CHECK(d.support()[d.size() - 1] > 30.0);      // heavy right tail
}

TEST_CASE("path length distribution on small graphs") {
  Distribution tri = path_length_distribution(kTriangle);
  CHECK(tri.size() == 1);
  CHECK(tri.support()[0] == 1.0);

  Distribution p3 = path_length_distribution(kPath3);
  CHECK(p3.size() == 2);
  CHECK(p3.pdf()[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(p3.pdf()[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("clustering distribution on small graphs") {
  Distribution tri = clustering_distribution(kTriangle);
  CHECK(tri.size() == 1);
  CHECK(tri.support()[0] == 1.0);

  Distribution star = clustering_distribution(kStar13);
  CHECK(star.size() == 1);
  CHECK(star.support()[0] == 0.0);

  // Triangle plus a pendant vertex: values {1, 1, 1/3, 0}.
  CompactGraph g = compact({{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  Distribution d = clustering_distribution(g);
  REQUIRE(d.size() == 3);
  CHECK(d.support()[0] == 0.0);
  CHECK(d.support()[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(d.support()[2] == 1.0);
  CHECK(d.pdf()[0] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(d.pdf()[1] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(d.pdf()[2] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("wcc size distribution on small graphs") {
  Distribution one = wcc_size_distribution(kTriangle);
  CHECK(one.size() == 1);
  CHECK(one.support()[0] == 3.0);
  CHECK(one.sample_count() == 1);

  SampledGraph two_tris =
      testing::graph_from_edges({{0, 1}, {1, 2}, {0, 2},
                                 {3, 4}, {4, 5}, {3, 5}});
  two_tris.add_node(9);
  Distribution d = wcc_size_distribution(two_tris);
  CHECK(d.sample_count() == 3);  // sizes {3, 3, 1}
  CHECK(d.support()[0] == 1.0);
  CHECK(d.pdf()[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(d.support()[1] == 3.0);
  CHECK(d.pdf()[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("empty and edge-free graphs raise errors") {
  CompactGraph empty;
  CHECK_THROWS_AS(degree_distribution(empty), std::invalid_argument);
  CHECK_THROWS_AS(clustering_distribution(empty), std::invalid_argument);
  CHECK_THROWS_AS(wcc_size_distribution(empty), std::invalid_argument);
  CHECK_THROWS_AS(path_length_distribution(empty), std::invalid_argument);

  SampledGraph isolated;
  isolated.add_node(1);
  CHECK_THROWS_AS(path_length_distribution(isolated), std::invalid_argument);
}

TEST_CASE("metric implementations match brute-force oracles bit for bit") {
  Rng rng(31337);
  std::vector<CompactGraph> fixtures;
  fixtures.push_back(kTriangle);
  fixtures.push_back(kStar13);
  fixtures.push_back(compact({{0, 1}, {2, 3}}));
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = 20 + rng.uniform_below(180);
    double p = 0.01 + 0.05 * rng.uniform01();
    fixtures.push_back(CompactGraph::from_edges(
        n, testing::random_edges(n, p, rng)));
  }
  fixtures.push_back(CompactGraph::from_edges(
      150, generate_synthetic(SyntheticModel::kPreferentialAttachment, 150, 2,
                              5)));

  for (const CompactGraph& g : fixtures) {
    REQUIRE(degree_distribution(g) == oracles::degree_by_recount(g));
    REQUIRE(clustering_distribution(g) == oracles::clustering_by_matrix(g));
    REQUIRE(wcc_size_distribution(g) == oracles::wcc_by_union_find(g));
    if (g.edge_count() > 0) {
      REQUIRE(path_length_distribution(g) ==
              oracles::paths_by_floyd_warshall(g));
    }
  }
}

TEST_CASE("sampled path sources give a valid distribution") {
  auto edges = generate_synthetic(SyntheticModel::kPreferentialAttachment,
                                  400, 2, 17);
  CompactGraph g = CompactGraph::from_edges(400, edges);
  PathLengthOptions opts;
  opts.exact_threshold = 100;  // force the estimator
  opts.source_budget = 50;
  Distribution a = path_length_distribution(g, opts);
  Distribution b = path_length_distribution(g, opts);
  CHECK(a == b);  // deterministic under a fixed seed
  double sum = 0.0;
  for (double x : a.pdf()) sum += x;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));

  opts.seed = 123;
  Distribution c = path_length_distribution(g, opts);
  CHECK(c.sample_count() > 0);
}
