#include "gss/stream.hpp"

#include "gss/rng.hpp"

namespace gss {

StreamSource permute_stream(std::vector<Edge> edges, std::uint64_t seed) {
  Rng rng(seed);
  fisher_yates_shuffle(edges, rng);
  return StreamSource(std::move(edges));
}

}  // namespace gss
