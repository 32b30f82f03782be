#include <benchmark/benchmark.h>

#include "gss/compact_graph.hpp"
#include "gss/metrics.hpp"
#include "gss/synthetic.hpp"

namespace {

using namespace gss;

const CompactGraph& pa_graph() {
  static const CompactGraph g = CompactGraph::from_edges(
      10000, generate_synthetic(SyntheticModel::kPreferentialAttachment,
                                10000, 5, 13));
  return g;
}

void BM_DegreeDistribution(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(degree_distribution(pa_graph()).size());
  }
}

void BM_ClusteringDistribution(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(clustering_distribution(pa_graph()).size());
  }
}

void BM_WccSizeDistribution(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(wcc_size_distribution(pa_graph()).size());
  }
}

void BM_PathLengthEstimated(benchmark::State& state) {
  PathLengthOptions opts;
  opts.exact_threshold = 1;  // always estimate
  opts.source_budget = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(path_length_distribution(pa_graph(), opts).size());
  }
}

}  // namespace

BENCHMARK(BM_DegreeDistribution)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClusteringDistribution)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WccSizeDistribution)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PathLengthEstimated)->Arg(100)->Arg(500)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
