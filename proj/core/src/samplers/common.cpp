#include "gss/samplers.hpp"

namespace gss {

UndersizedReservoirError::UndersizedReservoirError(std::size_t achieved,
                                                   std::size_t target)
    : std::runtime_error("edge reservoir covers " + std::to_string(achieved) +
                         " nodes, fewer than the requested " +
                         std::to_string(target)),
      achieved_nodes(achieved),
      target_nodes(target) {}

SampledGraph run_sampler(StreamSampler& sampler, StreamSource& stream) {
  while (stream.has_next() && !sampler.done()) {
    sampler.consume(stream.next());
  }
  sampler.finish();
  return sampler.snapshot();
}

SampledGraph streaming_ns(StreamSource& stream, std::size_t n,
                          std::uint64_t seed) {
  StreamingNodeSampler sampler(n, seed);
  return run_sampler(sampler, stream);
}

SampledGraph streaming_es(StreamSource& stream, std::size_t n, std::size_t m,
                          std::uint64_t seed) {
  StreamingEdgeSampler sampler(n, m, seed);
  return run_sampler(sampler, stream);
}

SampledGraph streaming_bfs(StreamSource& stream, std::size_t n,
                           std::size_t wsize, std::uint64_t seed) {
  StreamingBfsSampler sampler(n, wsize, seed);
  return run_sampler(sampler, stream);
}

SampledGraph pies(StreamSource& stream, std::size_t n, std::uint64_t seed) {
  PiesSampler sampler(n, seed);
  return run_sampler(sampler, stream);
}

}  // namespace gss
