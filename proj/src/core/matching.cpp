#include "mcp/core/matching.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace mcp {

Matching::Matching(std::vector<std::size_t> cache_of_request)
    : cache_of_request_(std::move(cache_of_request)),
      request_of_cache_(cache_of_request_.size(), cache_of_request_.size()) {
  const std::size_t m = cache_of_request_.size();
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = cache_of_request_[i];
    if (j >= m || request_of_cache_[j] != m) {
      throw std::invalid_argument("matching is not a permutation at request " +
                                  std::to_string(i + 1));
    }
    request_of_cache_[j] = i;
  }
}

Matching Matching::identity(std::size_t m) {
  std::vector<std::size_t> id(m);
  std::iota(id.begin(), id.end(), std::size_t{0});
  return Matching(std::move(id));
}

}  // namespace mcp
