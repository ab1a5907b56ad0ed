#include "mcp/core/fault_ledger.hpp"

#include <stdexcept>

namespace mcp {

FaultLedger::FaultLedger(std::size_t caches, std::uint64_t warmup_slots)
    : caches_(caches), warmup_(warmup_slots) {}

void FaultLedger::record(std::size_t faults) {
  if (faults > caches_) {
    throw std::logic_error("more faults than caches in one slot");
  }
  per_slot_.push_back(static_cast<std::uint32_t>(faults));
  total_ += faults;
}

std::uint64_t FaultLedger::total_after_warmup() const {
  std::uint64_t sum = 0;
  for (std::uint64_t t = warmup_; t < per_slot_.size(); ++t) {
    sum += per_slot_[t];
  }
  return sum;
}

double FaultLedger::rate_after_warmup() const {
  if (warmup_ >= per_slot_.size()) {
    throw std::logic_error("no slots recorded past the warm-up prefix");
  }
  return static_cast<double>(total_after_warmup()) /
         static_cast<double>(per_slot_.size() - warmup_);
}

}  // namespace mcp
