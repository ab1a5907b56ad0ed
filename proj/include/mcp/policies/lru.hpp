#pragma once

#include <cstddef>

#include "mcp/core/policy.hpp"

namespace mcp {

/// Identity matching; a miss at a full cache evicts the content with the
/// oldest last request (ties to the earlier arrival).
PolicyDecision lru_step(const CacheBankState& bank, const RequestBatch& batch);

/// Per-cache LRU starting from m empty caches.
class LruPolicy final : public Policy {
 public:
  LruPolicy(std::size_t m, std::size_t n, std::size_t k);

  std::string_view name() const override { return "lru"; }
  Dimensions dimensions() const override { return dims_; }
  CacheBankState initial_bank() const override {
    return CacheBankState::empty(dims_.caches, dims_.capacity);
  }
  PolicyDecision decide(const CacheBankState& bank, const RequestBatch& batch) const override {
    return lru_step(bank, batch);
  }

 private:
  Dimensions dims_;
};

}  // namespace mcp
