#include <benchmark/benchmark.h>

#include "gss/samplers.hpp"
#include "gss/stream.hpp"
#include "gss/synthetic.hpp"

namespace {

using namespace gss;

const std::vector<Edge>& pa_stream_edges() {
  static const std::vector<Edge> edges = [] {
    auto e = generate_synthetic(SyntheticModel::kPreferentialAttachment,
                                20000, 5, 7);
    StreamSource s = permute_stream(std::move(e), 11);
    return std::vector<Edge>(s.edges().begin(), s.edges().end());
  }();
  return edges;
}

constexpr std::size_t kBudget = 2000;

template <class Sampler, class... Args>
void run_pass(benchmark::State& state, Args... args) {
  const auto& edges = pa_stream_edges();
  for (auto _ : state) {
    Sampler sampler(args...);
    for (const Edge& e : edges) {
      if (sampler.done()) {
        break;
      }
      sampler.consume(e);
    }
    sampler.finish();
    benchmark::DoNotOptimize(sampler.current().edge_count());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(edges.size()));
}

void BM_StreamingNs(benchmark::State& state) {
  run_pass<StreamingNodeSampler>(state, kBudget, std::uint64_t{3});
}

void BM_StreamingEs(benchmark::State& state) {
  run_pass<StreamingEdgeSampler>(state, kBudget, std::size_t{0},
                                 std::uint64_t{3});
}

void BM_StreamingBfs(benchmark::State& state) {
  run_pass<StreamingBfsSampler>(state, kBudget, std::size_t{100},
                                std::uint64_t{3});
}

void BM_Pies(benchmark::State& state) {
  run_pass<PiesSampler>(state, kBudget, std::uint64_t{3});
}

void BM_UniformHash(benchmark::State& state) {
  std::uint64_t key = 0;
  double acc = 0.0;
  for (auto _ : state) {
    acc += uniform_hash(++key, 42);
  }
  benchmark::DoNotOptimize(acc);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
}

}  // namespace

BENCHMARK(BM_StreamingNs)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StreamingEs)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StreamingBfs)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Pies)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UniformHash);

BENCHMARK_MAIN();
