#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mcp/core/cache_state.hpp"
#include "mcp/core/matching.hpp"
#include "mcp/core/types.hpp"

namespace mcp {

struct CacheOutcome {
  ContentId request;
  bool hit = false;
  std::optional<ContentId> evicted;
};

struct ServiceResult {
  CacheBankState bank;
  std::size_t faults = 0;
  std::vector<CacheOutcome> outcomes;  // indexed by cache
};

/// Serves one batch. Hits are evaluated on the pre-service state; every miss
/// fetches the requested content into its assigned cache, removing the named
/// victim if one is given. The service slot is `bank.slot_clock + 1`.
///
/// Throws ProtocolError for length mismatches, a missing victim on a full
/// cache, or a victim named for a hit; InvalidEvictionError when the victim
/// is not cached.
ServiceResult apply_service(CacheBankState bank, const RequestBatch& batch,
                            const Matching& matching,
                            std::span<const std::optional<ContentId>> evictions);

}  // namespace mcp
