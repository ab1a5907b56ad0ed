#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "mcp/core/policy.hpp"
#include "mcp/workloads/correlated.hpp"
#include "mcp/workloads/zipf.hpp"

namespace mcp {

/// i.i.d. requests from a fixed pmf on every stream.
class IidWorkload final : public Workload {
 public:
  IidWorkload(std::vector<double> pmf, std::size_t m);
  IidWorkload(const ZipfPopularity& zipf, std::size_t m) : IidWorkload(zipf.pmf, m) {}

  std::size_t caches() const override { return m_; }
  std::size_t catalog() const override { return sampler_.size(); }
  std::unique_ptr<RequestSource> open(std::uint64_t seed) const override;

 private:
  CategoricalSampler sampler_;
  std::size_t m_;
};

/// m independent streams of the grouped correlated model; stream j draws
/// from CounterRng(seed, j).
class CorrelatedWorkload final : public Workload {
 public:
  CorrelatedWorkload(GroupedCorrelatedModel model, std::size_t m);

  std::size_t caches() const override { return m_; }
  std::size_t catalog() const override { return model_.catalog(); }
  std::unique_ptr<RequestSource> open(std::uint64_t seed) const override;

  const GroupedCorrelatedModel& model() const { return model_; }

 private:
  GroupedCorrelatedModel model_;
  std::size_t m_;
};

/// A fixed list of batches; the seed is ignored.
class SequenceWorkload final : public Workload {
 public:
  /// Throws ConfigError on ragged batches or contents outside [1, n].
  SequenceWorkload(std::vector<RequestBatch> batches, std::size_t n);

  std::size_t caches() const override { return m_; }
  std::size_t catalog() const override { return n_; }
  std::optional<std::uint64_t> length() const override { return batches_.size(); }
  std::unique_ptr<RequestSource> open(std::uint64_t seed) const override;

 private:
  std::vector<RequestBatch> batches_;
  std::size_t m_;
  std::size_t n_;
};

}  // namespace mcp
