#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mcp/core/types.hpp"
#include "mcp/workloads/popularity.hpp"

namespace mcp {

/// Truncated Zipf law over [1, n]: pmf[i-1] proportional to i^-beta.
struct ZipfPopularity {
  std::size_t n = 0;
  double beta = 0.0;
  std::vector<double> pmf;

  CatalogPopularity catalog() const { return CatalogPopularity(pmf); }
};

/// Exact normalisation by compensated summation. Throws ConfigError for
/// n = 0 or a negative / non-finite beta.
ZipfPopularity zipf_pmf(std::size_t n, double beta);

/// Inverse-CDF sampler over a finite pmf; sample(u) maps u in [0,1) to a
/// 1-based content.
class CategoricalSampler {
 public:
  explicit CategoricalSampler(std::span<const double> pmf);

  std::size_t size() const { return cdf_.size(); }
  ContentId sample(double u) const;

 private:
  std::vector<double> cdf_;
};

/// Request of stream j (zero-based) in `slot`. Each (slot, j) owns its own
/// counter-based draw, so a single stream can be replayed in isolation.
ContentId sample_iid_request(const CategoricalSampler& sampler, std::uint64_t seed,
                             std::uint64_t slot, std::size_t stream);

/// m independent draws for one slot.
RequestBatch sample_iid_batch(const CategoricalSampler& sampler, std::size_t m,
                              std::uint64_t seed, std::uint64_t slot);

}  // namespace mcp
