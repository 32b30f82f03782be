#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace gss {

// Seeded generator wrapping mt19937_64. Bounded and real draws are derived
// from the raw 64-bit output by hand so that results do not depend on the
// standard library's distribution internals; the raw engine output itself is
// specified by the standard, which makes every draw reproducible across
// platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on [0, bound), bound >= 1. Rejection keeps the draw unbiased.
  std::uint64_t uniform_below(std::uint64_t bound);

  std::size_t uniform_index(std::size_t n) {
    return static_cast<std::size_t>(uniform_below(n));
  }

 private:
  std::mt19937_64 eng_;
};

// Independent sub-seed for a named consumer (permutation, sampler, metrics)
// of a run seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream_id);

template <class T>
void fisher_yates_shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = rng.uniform_index(i);
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace gss
