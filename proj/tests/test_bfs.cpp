#include <doctest.h>

#include <algorithm>

#include "gss/metrics.hpp"
#include "gss/samplers.hpp"
#include "gss/synthetic.hpp"
#include "test_util.hpp"

using namespace gss;

TEST_CASE("bfs samples the single edge of a one-edge stream") {
  StreamSource stream(testing::edges_of({{0, 1}}));
  SampledGraph sample = streaming_bfs(stream, 2, 100, 9);
  CHECK(sample.node_count() == 2);
  CHECK(sample.edge_count() == 1);
  CHECK(sample.has_edge(0, 1));
}

TEST_CASE("bfs burns every edge of a path streamed in order") {
  // With the window larger than the stream, no edge ever expires, so the
  // drain phase keeps burning until all four edges are sampled.
  std::vector<Edge> path =
      testing::edges_of({{1, 2}, {2, 3}, {3, 4}, {4, 5}});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    StreamSource stream(path);  // unpermuted: path order
    SampledGraph sample = streaming_bfs(stream, 5, 100, seed);
    CHECK(sample.node_count() == 5);
    CHECK(sample.edge_list() == path);
  }
}

TEST_CASE("bfs with a full window keeps a connected sample") {
  Rng rng(6021);
  for (int trial = 0; trial < 20; ++trial) {
    auto edges = generate_synthetic(SyntheticModel::kPreferentialAttachment,
                                    40 + rng.uniform_below(60), 2,
                                    rng.next_u64());
    StreamSource stream = permute_stream(edges, rng.next_u64());
    SampledGraph sample =
        streaming_bfs(stream, 1000000, edges.size() + 1, rng.next_u64());
    REQUIRE_FALSE(sample.empty());
    Distribution wcc = wcc_size_distribution(sample);
    CHECK(wcc.sample_count() == 1);
  }
}

TEST_CASE("bfs respects the node budget") {
  Rng rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n_nodes = 10 + rng.uniform_below(60);
    auto edges = testing::random_edges(n_nodes, 0.15, rng);
    if (edges.empty()) {
      continue;
    }
    std::size_t budget = 2 + rng.uniform_below(n_nodes);
    StreamSource stream = permute_stream(edges, rng.next_u64());
    SampledGraph sample =
        streaming_bfs(stream, budget, 10 + rng.uniform_below(50),
                      rng.next_u64());
    CHECK(sample.node_count() <= budget);
    for (const Edge& e : sample.edge_list()) {
      CHECK(sample.has_node(e.u));
      CHECK(sample.has_node(e.v));
    }
  }
}

TEST_CASE("bfs is deterministic for a fixed seed") {
  auto edges = generate_synthetic(SyntheticModel::kErdosRenyi, 120, 0.05, 3);
  StreamSource s1 = permute_stream(edges, 8);
  StreamSource s2 = permute_stream(edges, 8);
  CHECK(streaming_bfs(s1, 30, 100, 5) == streaming_bfs(s2, 30, 100, 5));
}

TEST_CASE("bfs stops consuming once the budget is hit") {
  auto edges = generate_synthetic(SyntheticModel::kPreferentialAttachment,
                                  300, 3, 4);
  StreamSource stream = permute_stream(edges, 2);
  StreamingBfsSampler sampler(10, 100, 6);
  while (stream.has_next() && !sampler.done()) {
    sampler.consume(stream.next());
  }
  sampler.finish();
  CHECK(sampler.done());
  CHECK(stream.reads() <= edges.size());
  CHECK(sampler.snapshot().node_count() <= 10);
}

TEST_CASE("bfs window occupancy never exceeds wsize") {
  auto edges = generate_synthetic(SyntheticModel::kErdosRenyi, 80, 0.1, 44);
  StreamSource stream = permute_stream(edges, 9);
  StreamingBfsSampler sampler(70, 25, 10);
  std::size_t max_aux = 0;
  std::uint64_t burned_plus_queue = 0;
  while (stream.has_next() && !sampler.done()) {
    sampler.consume(stream.next());
    const SampledGraph& cur = sampler.current();
    std::size_t aux = sampler.state_entries() - cur.node_count() -
                      cur.edge_count();
    max_aux = std::max(max_aux, aux);
    burned_plus_queue = cur.edge_count();
  }
  // aux = window + queue; queue length is bounded by burns.
  CHECK(max_aux <= 25 + burned_plus_queue + edges.size());
}
