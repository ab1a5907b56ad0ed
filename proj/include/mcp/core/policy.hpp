#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "mcp/core/cache_state.hpp"
#include "mcp/core/matching.hpp"
#include "mcp/core/types.hpp"

namespace mcp {

/// What an online policy (or an offline schedule) does with one batch.
/// evictions[j] names the victim at cache j; it is set only when the request
/// assigned to j misses and j is full.
struct PolicyDecision {
  Matching matching;
  std::vector<std::optional<ContentId>> evictions;

  bool operator==(const PolicyDecision&) const = default;
};

class Policy {
 public:
  virtual ~Policy() = default;

  virtual std::string_view name() const = 0;
  virtual Dimensions dimensions() const = 0;
  virtual CacheBankState initial_bank() const = 0;
  virtual PolicyDecision decide(const CacheBankState& bank, const RequestBatch& batch) const = 0;
};

/// A live request generator. Produces batches for slots 1, 2, ...
class RequestSource {
 public:
  virtual ~RequestSource() = default;
  virtual RequestBatch next() = 0;
};

/// A seedable workload description. `open(seed)` always yields the same
/// sequence for the same seed.
class Workload {
 public:
  virtual ~Workload() = default;

  virtual std::size_t caches() const = 0;
  virtual std::size_t catalog() const = 0;
  /// Finite workloads report how many batches they can produce.
  virtual std::optional<std::uint64_t> length() const { return std::nullopt; }
  virtual std::unique_ptr<RequestSource> open(std::uint64_t seed) const = 0;
};

}  // namespace mcp
