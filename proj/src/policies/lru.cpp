#include "mcp/policies/lru.hpp"

#include "mcp/core/errors.hpp"

namespace mcp {

PolicyDecision lru_step(const CacheBankState& bank, const RequestBatch& batch) {
  const std::size_t m = bank.size();
  PolicyDecision decision{Matching::identity(m), std::vector<std::optional<ContentId>>(m)};
  for (std::size_t j = 0; j < m; ++j) {
    const CacheState& cache = bank[j];
    if (!cache.contains(batch[j]) && cache.full()) {
      decision.evictions[j] = cache.least_recently_used();
    }
  }
  return decision;
}

LruPolicy::LruPolicy(std::size_t m, std::size_t n, std::size_t k) : dims_{m, n, k} {
  if (m == 0 || n == 0 || k == 0) {
    throw ConfigError("LRU needs m, n, k >= 1");
  }
}

}  // namespace mcp
