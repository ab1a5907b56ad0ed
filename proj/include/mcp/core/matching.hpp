#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mcp {

/// Perfect matching between request positions and caches. Both sides are
/// zero-based; position i is served by cache `cache_for(i)`.
class Matching {
 public:
  Matching() = default;

  /// Throws std::invalid_argument unless `cache_of_request` is a permutation.
  explicit Matching(std::vector<std::size_t> cache_of_request);

  static Matching identity(std::size_t m);

  std::size_t size() const { return cache_of_request_.size(); }
  std::size_t cache_for(std::size_t request) const { return cache_of_request_[request]; }
  std::size_t request_for(std::size_t cache) const { return request_of_cache_[cache]; }
  std::span<const std::size_t> assignment() const { return cache_of_request_; }

  bool operator==(const Matching& other) const {
    return cache_of_request_ == other.cache_of_request_;
  }

 private:
  std::vector<std::size_t> cache_of_request_;
  std::vector<std::size_t> request_of_cache_;
};

}  // namespace mcp
