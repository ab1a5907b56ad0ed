#include "mcp/policies/rules_compliant.hpp"

#include <string>

#include "mcp/core/errors.hpp"
#include "mcp/policies/assignment.hpp"

namespace mcp {

PolicyDecision rules_compliant_step(const CacheBankState& bank, const RequestBatch& batch) {
  const std::size_t m = bank.size();
  if (batch.size() != m) {
    throw ProtocolError("batch length " + std::to_string(batch.size()) + " differs from m = " +
                        std::to_string(m));
  }
  if (m > kRulesCompliantMaxCaches) {
    throw ConfigError("rules-compliant matching supports at most " +
                      std::to_string(kRulesCompliantMaxCaches) + " caches");
  }

  // A hit is worth 2^m, which dominates the positional preference 2^(m-1-i).
  WeightMatrix weights(m);
  const std::int64_t hit = std::int64_t{1} << m;
  for (std::size_t i = 0; i < m; ++i) {
    const std::int64_t preference = std::int64_t{1} << (m - 1 - i);
    for (std::size_t j = 0; j < m; ++j) {
      if (bank[j].contains(batch[i])) {
        weights(i, j) = hit + preference;
      }
    }
  }
  Assignment best = lexicographic_max_weight_assignment(weights);

  PolicyDecision decision{Matching(std::move(best.column_of_row)),
                          std::vector<std::optional<ContentId>>(m)};
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = decision.matching.cache_for(i);
    const CacheState& cache = bank[j];
    if (!cache.contains(batch[i]) && cache.full()) {
      decision.evictions[j] = cache.oldest_arrival();
    }
  }
  return decision;
}

RulesCompliantPolicy::RulesCompliantPolicy(std::size_t m, std::size_t n, std::size_t k,
                                           std::optional<CacheBankState> initial)
    : dims_{m, n, k}, initial_(std::move(initial)) {
  if (m == 0 || n == 0 || k == 0) {
    throw ConfigError("rules-compliant policy needs m, n, k >= 1");
  }
  if (m > kRulesCompliantMaxCaches) {
    throw ConfigError("rules-compliant matching supports at most " +
                      std::to_string(kRulesCompliantMaxCaches) + " caches");
  }
  if (initial_) {
    if (initial_->size() != m) {
      throw ConfigError("initial bank has the wrong number of caches");
    }
    for (const CacheState& cache : initial_->caches) {
      if (cache.capacity() != k) {
        throw ConfigError("initial bank has the wrong cache capacity");
      }
    }
  }
}

CacheBankState RulesCompliantPolicy::initial_bank() const {
  return initial_ ? *initial_ : CacheBankState::empty(dims_.caches, dims_.capacity);
}

}  // namespace mcp
