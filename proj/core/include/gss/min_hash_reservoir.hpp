#pragma once

#include <cstddef>
#include <iterator>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gss {

// Bottom-k sketch: retains the `capacity` keys with the smallest hash values
// offered so far. Admission depends only on the multiset of hashes seen, not
// on arrival order, so after any prefix of a stream the stored keys are
// exactly the capacity smallest-hash keys of that prefix.
template <class Key, class KeyHash = std::hash<Key>>
class MinHashReservoir {
 public:
  enum class Offer { kAlreadyPresent, kAdmitted, kRejected };

  struct OfferResult {
    Offer status;
    std::optional<Key> evicted;
  };

  explicit MinHashReservoir(std::size_t capacity) : capacity_(capacity) {
    if (capacity == 0) {
      throw std::invalid_argument("reservoir capacity must be positive");
    }
  }

  bool contains(const Key& k) const { return hash_of_.contains(k); }
  std::size_t size() const { return hash_of_.size(); }
  std::size_t capacity() const { return capacity_; }
  bool full() const { return hash_of_.size() >= capacity_; }

  // Largest stored hash; reservoir must be nonempty.
  double max_hash() const { return std::prev(ordered_.end())->first; }

  OfferResult offer(const Key& k, double hash) {
    if (contains(k)) {
      return {Offer::kAlreadyPresent, std::nullopt};
    }
    if (!full()) {
      insert(k, hash);
      return {Offer::kAdmitted, std::nullopt};
    }
    auto worst = std::prev(ordered_.end());
    if (hash >= worst->first) {
      return {Offer::kRejected, std::nullopt};
    }
    Key evicted = worst->second;
    hash_of_.erase(evicted);
    ordered_.erase(worst);
    insert(k, hash);
    return {Offer::kAdmitted, std::move(evicted)};
  }

  // Entries sorted by ascending hash.
  std::vector<std::pair<Key, double>> items_by_hash() const {
    std::vector<std::pair<Key, double>> out;
    out.reserve(hash_of_.size());
    for (const auto& [h, k] : ordered_) {
      out.emplace_back(k, h);
    }
    return out;
  }

 private:
  void insert(const Key& k, double hash) {
    hash_of_.emplace(k, hash);
    ordered_.emplace(hash, k);
  }

  std::size_t capacity_;
  std::unordered_map<Key, double, KeyHash> hash_of_;
  std::set<std::pair<double, Key>> ordered_;
};

}  // namespace gss
