#include "gss/rng.hpp"

#include <stdexcept>

#include "gss/hashing.hpp"

namespace gss {

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("uniform_below: bound must be positive");
  }
  // Reject the low residue band so every value in [0, bound) is equally
  // likely.
  std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t r = next_u64();
    if (r >= threshold) {
      return r % bound;
    }
  }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream_id) {
  return mix64(seed ^ mix64(stream_id + 0x9e3779b97f4a7c15ULL));
}

}  // namespace gss
