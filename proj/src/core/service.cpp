#include "mcp/core/service.hpp"

#include <string>

#include "mcp/core/errors.hpp"

namespace mcp {

ServiceResult apply_service(CacheBankState bank, const RequestBatch& batch,
                            const Matching& matching,
                            std::span<const std::optional<ContentId>> evictions) {
  const std::size_t m = bank.size();
  if (batch.size() != m || matching.size() != m || evictions.size() != m) {
    throw ProtocolError("batch, matching and evictions must all have length m = " +
                        std::to_string(m));
  }

  ServiceResult result;
  result.outcomes.resize(m);

  // Validate everything against the pre-service state before touching it.
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = matching.cache_for(i);
    const CacheState& cache = bank[j];
    const ContentId request = batch[i];
    const auto& victim = evictions[j];
    CacheOutcome& outcome = result.outcomes[j];
    outcome.request = request;
    outcome.hit = cache.contains(request);
    if (outcome.hit) {
      if (victim) {
        throw ProtocolError("eviction named for cache " + std::to_string(j + 1) +
                            " whose request hits");
      }
      continue;
    }
    if (victim) {
      if (!cache.contains(*victim)) {
        throw InvalidEvictionError("cache " + std::to_string(j + 1) + " does not hold content " +
                                   std::to_string(victim->value));
      }
    } else if (cache.full()) {
      throw ProtocolError("miss at full cache " + std::to_string(j + 1) +
                          " without an eviction");
    }
    outcome.evicted = victim;
  }

  const std::uint64_t now = bank.slot_clock + 1;
  for (std::size_t j = 0; j < m; ++j) {
    CacheState& cache = bank[j];
    const CacheOutcome& outcome = result.outcomes[j];
    if (outcome.hit) {
      cache.touch(outcome.request, now);
      continue;
    }
    if (outcome.evicted) {
      cache.erase(*outcome.evicted);
    }
    cache.insert(outcome.request, now);
    ++result.faults;
  }
  bank.slot_clock = now;
  result.bank = std::move(bank);
  return result;
}

}  // namespace mcp
