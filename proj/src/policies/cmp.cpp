#include "mcp/policies/cmp.hpp"

#include <string>

#include "mcp/core/errors.hpp"

namespace mcp {

CacheBankState cmp_init(const CatalogPopularity& pop, std::size_t m, std::size_t k) {
  if (k > pop.size()) {
    throw ConfigError("CMP needs k <= n (k=" + std::to_string(k) +
                      ", n=" + std::to_string(pop.size()) + ")");
  }
  std::vector<ContentId> top(pop.order().begin(), pop.order().begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<std::vector<ContentId>> per_cache(m, top);
  return CacheBankState::preloaded(per_cache, k);
}

PolicyDecision cmp_step(const CacheBankState& bank, const RequestBatch& batch,
                        const CatalogPopularity& pop) {
  const std::size_t m = bank.size();
  PolicyDecision decision{Matching::identity(m), std::vector<std::optional<ContentId>>(m)};
  for (std::size_t j = 0; j < m; ++j) {
    const CacheState& cache = bank[j];
    if (cache.contains(batch[j]) || !cache.full()) {
      continue;
    }
    ContentId victim;
    std::size_t worst_rank = 0;
    for (const auto& [id, e] : cache.entries()) {
      const std::size_t r = pop.rank(id);
      if (r > worst_rank) {
        worst_rank = r;
        victim = id;
      }
    }
    decision.evictions[j] = victim;
  }
  return decision;
}

CmpPolicy::CmpPolicy(CatalogPopularity pop, std::size_t m, std::size_t k, CmpStart start)
    : pop_(std::move(pop)), m_(m), k_(k), start_(start) {
  if (m == 0 || k == 0) {
    throw ConfigError("CMP needs m >= 1 and k >= 1");
  }
  if (k > pop_.size()) {
    throw ConfigError("CMP needs k <= n (k=" + std::to_string(k) +
                      ", n=" + std::to_string(pop_.size()) + ")");
  }
}

CacheBankState CmpPolicy::initial_bank() const {
  return start_ == CmpStart::preloaded ? cmp_init(pop_, m_, k_) : CacheBankState::empty(m_, k_);
}

}  // namespace mcp
