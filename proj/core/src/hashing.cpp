#include "gss/hashing.hpp"

namespace gss {

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

double uniform_hash(std::uint64_t key, std::uint64_t salt) {
  std::uint64_t x = mix64(key ^ mix64(salt + 0x9e3779b97f4a7c15ULL));
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

double uniform_edge_hash(const Edge& e, std::uint64_t salt) {
  std::uint64_t key = (static_cast<std::uint64_t>(e.u) << 32) | e.v;
  return uniform_hash(key, salt);
}

}  // namespace gss
