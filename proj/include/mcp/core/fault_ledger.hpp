#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mcp {

/// Per-slot fault counts for one run. Totals always include compulsory
/// misses; the warm-up prefix is excluded only from rate estimates.
class FaultLedger {
 public:
  explicit FaultLedger(std::size_t caches, std::uint64_t warmup_slots = 0);

  void record(std::size_t faults);

  std::size_t caches() const { return caches_; }
  std::uint64_t slots() const { return per_slot_.size(); }
  std::uint64_t warmup_slots() const { return warmup_; }
  void set_warmup_slots(std::uint64_t warmup) { warmup_ = warmup; }
  std::span<const std::uint32_t> per_slot_faults() const { return per_slot_; }

  std::uint64_t total() const { return total_; }
  std::uint64_t total_after_warmup() const;
  /// Mean faults per slot after the warm-up prefix, in [0, m].
  /// Throws std::logic_error when no slot lies past the warm-up.
  double rate_after_warmup() const;

  bool operator==(const FaultLedger&) const = default;

 private:
  std::size_t caches_;
  std::uint64_t warmup_;
  std::uint64_t total_ = 0;
  std::vector<std::uint32_t> per_slot_;
};

}  // namespace mcp
