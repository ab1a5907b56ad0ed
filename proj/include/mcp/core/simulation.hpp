#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <vector>

#include "mcp/core/cache_state.hpp"
#include "mcp/core/fault_ledger.hpp"
#include "mcp/core/policy.hpp"
#include "mcp/core/types.hpp"

namespace mcp {

struct TraceRow {
  std::uint64_t slot = 0;
  std::size_t cache = 0;  // zero-based; written 1-based in CSV
  ContentId request;
  bool hit = false;
  std::optional<ContentId> evicted;

  bool operator==(const TraceRow&) const = default;
};

class SimulationTrace {
 public:
  void append(TraceRow row) { rows_.push_back(row); }
  const std::vector<TraceRow>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }

  /// Columns: slot,cache,request,hit,evicted (evicted empty when none).
  void write_csv(std::ostream& out) const;

  bool operator==(const SimulationTrace&) const = default;

 private:
  std::vector<TraceRow> rows_;
};

/// Called after each slot with the post-service bank and the batch served.
using SlotObserver = std::function<void(const CacheBankState&, const RequestBatch&, std::size_t faults)>;

struct SimulationOptions {
  std::uint64_t warmup_slots = 0;
  bool record_trace = false;
  SlotObserver observer;
};

struct SimulationResult {
  FaultLedger ledger;
  SimulationTrace trace;
  CacheBankState final_bank;
};

/// Runs `slots` slots of `policy` against `workload` opened with `seed`.
/// Throws ConfigError when the two disagree on m or n, or when a finite
/// workload is shorter than `slots`.
SimulationResult run_simulation(const Policy& policy, const Workload& workload,
                                std::uint64_t slots, std::uint64_t seed,
                                const SimulationOptions& options = {});

}  // namespace mcp
