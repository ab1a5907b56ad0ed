#pragma once

#include <cstddef>
#include <optional>

#include "mcp/core/policy.hpp"

namespace mcp {

/// Largest bank the rules-compliant matcher accepts (its tie-break weights
/// are packed into 64-bit integers).
inline constexpr std::size_t kRulesCompliantMaxCaches = 32;

/// Online policy that
///   1. serves the batch through a maximum-weight matching, where the edge
///      (request i, cache j) weighs 1 iff cache j holds request i;
///   2. on every miss, ejects the oldest-arrived content of the cache.
///
/// Ties between maximum-weight matchings: first prefer the one whose set of
/// hitting positions is lexicographically earliest (request 1 hitting beats
/// request 2 hitting, and so on). For m = 2 this is exactly the convention
/// that, when both requests sit in one cache u and neither in the other, the
/// first request is served from u. Remaining ties go to the lexicographically
/// smallest (request position -> cache index) assignment.
PolicyDecision rules_compliant_step(const CacheBankState& bank, const RequestBatch& batch);

class RulesCompliantPolicy final : public Policy {
 public:
  /// Starts from empty caches unless `initial` is given. Throws ConfigError
  /// if m exceeds kRulesCompliantMaxCaches or `initial` does not match m, k.
  RulesCompliantPolicy(std::size_t m, std::size_t n, std::size_t k,
                       std::optional<CacheBankState> initial = std::nullopt);

  std::string_view name() const override { return "rules_compliant"; }
  Dimensions dimensions() const override { return dims_; }
  CacheBankState initial_bank() const override;
  PolicyDecision decide(const CacheBankState& bank, const RequestBatch& batch) const override {
    return rules_compliant_step(bank, batch);
  }

 private:
  Dimensions dims_;
  std::optional<CacheBankState> initial_;
};

}  // namespace mcp
