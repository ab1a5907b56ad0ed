#include "mcp/workloads/zipf.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mcp/core/errors.hpp"
#include "mcp/core/numeric.hpp"
#include "mcp/core/rng.hpp"

namespace mcp {

ZipfPopularity zipf_pmf(std::size_t n, double beta) {
  if (n == 0) {
    throw ConfigError("empty catalog: n must be at least 1");
  }
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw ConfigError("Zipf exponent must be finite and non-negative");
  }
  ZipfPopularity zipf{n, beta, std::vector<double>(n)};
  CompensatedSum norm;
  for (std::size_t i = 0; i < n; ++i) {
    zipf.pmf[i] = std::pow(static_cast<double>(i + 1), -beta);
  }
  // Smallest terms first.
  for (std::size_t i = n; i-- > 0;) {
    norm += zipf.pmf[i];
  }
  const double z = norm.value();
  for (double& p : zipf.pmf) {
    p /= z;
  }
  return zipf;
}

CategoricalSampler::CategoricalSampler(std::span<const double> pmf) : cdf_(pmf.size()) {
  if (pmf.empty()) {
    throw ConfigError("cannot sample from an empty catalog");
  }
  CompensatedSum acc;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    if (!(pmf[i] >= 0.0)) {
      throw ConfigError("negative probability at content " + std::to_string(i + 1));
    }
    acc += pmf[i];
    cdf_[i] = acc.value();
  }
  const double total = cdf_.back();
  if (!(total > 0.0)) {
    throw ConfigError("pmf has zero total mass");
  }
  for (double& c : cdf_) {
    c /= total;
  }
  cdf_.back() = 1.0;
}

ContentId CategoricalSampler::sample(double u) const {
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) {
    --it;
  }
  // upper_bound never lands on a zero-mass entry.
  return ContentId(static_cast<std::uint32_t>(it - cdf_.begin()) + 1);
}

ContentId sample_iid_request(const CategoricalSampler& sampler, std::uint64_t seed,
                             std::uint64_t slot, std::size_t stream) {
  CounterRng rng(seed, slot, stream);
  return sampler.sample(rng.uniform01());
}

RequestBatch sample_iid_batch(const CategoricalSampler& sampler, std::size_t m,
                              std::uint64_t seed, std::uint64_t slot) {
  RequestBatch batch{slot, {}};
  batch.requests.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    batch.requests.push_back(sample_iid_request(sampler, seed, slot, j));
  }
  return batch;
}

}  // namespace mcp
