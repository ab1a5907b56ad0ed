#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "mcp/core/cache_state.hpp"
#include "mcp/core/policy.hpp"
#include "mcp/core/types.hpp"
#include "mcp/workloads/popularity.hpp"

namespace mcp {

/// Offline decisions for a whole sequence, one per batch.
struct OfflineSchedule {
  std::vector<PolicyDecision> decisions;
  std::uint64_t total_faults = 0;
};

/// Replays `schedule` through apply_service from `initial` and returns the
/// number of faults observed.
std::uint64_t replay_schedule(CacheBankState initial, std::span<const RequestBatch> batches,
                              const OfflineSchedule& schedule);

/// Columns: slot,request_pos,cache,evicted (1-based; evicted empty when none).
void write_schedule_csv(std::ostream& out, const OfflineSchedule& schedule);

// ---------------------------------------------------------------------------
// Single cache.

/// Furthest-in-future eviction for one cache of size k. Contents never
/// requested again are evicted first; ties go to the larger index.
OfflineSchedule belady(std::span<const ContentId> sequence, std::size_t k,
                       std::span<const ContentId> initial = {});

// ---------------------------------------------------------------------------
// Exhaustive offline optimum for tiny banks.

struct SearchBudget {
  std::size_t max_catalog = 6;
  std::size_t max_capacity = 3;
  std::size_t max_caches = 3;
  std::size_t max_slots = 8;

  bool operator==(const SearchBudget&) const = default;
};

/// Minimum total faults over every matching and every eviction choice, by
/// memoised search over (slot, bank as an unordered multiset of content
/// sets). Caches change only on faults. Throws BudgetError when the instance
/// exceeds `budget`; a budget above the default prints a cost warning to
/// std::clog.
OfflineSchedule brute_force_opt(std::span<const RequestBatch> batches, std::size_t m,
                                std::size_t k, std::size_t n, const CacheBankState& initial,
                                const SearchBudget& budget = {});

// ---------------------------------------------------------------------------
// Adversarial stream.

/// Two-fault offline schedule for adversarial_stream(cycles), starting from
/// adversarial::initial_bank(): the prefix (a1, b1) is cross-assigned so that
/// every later batch hits.
OfflineSchedule adversarial_offline_schedule(std::size_t cycles);

/// Same, but checks that `batches` is exactly a generator output. Throws
/// ScheduleMismatchError otherwise.
OfflineSchedule adversarial_offline_schedule(std::span<const RequestBatch> batches);

// ---------------------------------------------------------------------------

/// Expected-fault lower bound for any offline policy under i.i.d. requests:
/// slots * m * sum_{i=mk+1}^{n} p_i (p sorted descending). Returns 0 and
/// warns on std::clog when mk >= n.
double opt_bound_faults(const CatalogPopularity& pop, std::size_t m, std::size_t k,
                        std::uint64_t slots);

}  // namespace mcp
