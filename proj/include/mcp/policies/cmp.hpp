#pragma once

#include <cstddef>

#include "mcp/core/policy.hpp"
#include "mcp/workloads/popularity.hpp"

namespace mcp {

/// Every cache holds the k most popular contents; pre-loading is not a fault.
/// Throws ConfigError if k > n.
CacheBankState cmp_init(const CatalogPopularity& pop, std::size_t m, std::size_t k);

/// Fixed identity matching; a miss at a full cache evicts the least popular
/// cached content (largest rank).
PolicyDecision cmp_step(const CacheBankState& bank, const RequestBatch& batch,
                        const CatalogPopularity& pop);

enum class CmpStart { preloaded, empty };

/// Cache Most Popular with a fixed request-to-cache matching. The ranking
/// may come from the true pmf or from estimated p~ under correlated arrivals.
class CmpPolicy final : public Policy {
 public:
  CmpPolicy(CatalogPopularity pop, std::size_t m, std::size_t k,
            CmpStart start = CmpStart::preloaded);

  std::string_view name() const override { return "cmp"; }
  Dimensions dimensions() const override { return {m_, pop_.size(), k_}; }
  CacheBankState initial_bank() const override;
  PolicyDecision decide(const CacheBankState& bank, const RequestBatch& batch) const override {
    return cmp_step(bank, batch, pop_);
  }

  const CatalogPopularity& popularity() const { return pop_; }

 private:
  CatalogPopularity pop_;
  std::size_t m_;
  std::size_t k_;
  CmpStart start_;
};

}  // namespace mcp
