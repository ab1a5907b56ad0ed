#include "mcp/workloads/workload.hpp"

#include <string>

#include "mcp/core/errors.hpp"
#include "mcp/core/rng.hpp"

namespace mcp {

namespace {

class IidSource final : public RequestSource {
 public:
  IidSource(const CategoricalSampler& sampler, std::size_t m, std::uint64_t seed)
      : sampler_(sampler), m_(m), seed_(seed) {}

  RequestBatch next() override { return sample_iid_batch(sampler_, m_, seed_, ++slot_); }

 private:
  const CategoricalSampler& sampler_;
  std::size_t m_;
  std::uint64_t seed_;
  std::uint64_t slot_ = 0;
};

class CorrelatedSource final : public RequestSource {
 public:
  CorrelatedSource(const GroupedCorrelatedModel& model, std::size_t m, std::uint64_t seed)
      : model_(model), states_(m) {
    rngs_.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
      rngs_.emplace_back(seed, j);
    }
  }

  RequestBatch next() override {
    RequestBatch batch{++slot_, {}};
    batch.requests.reserve(states_.size());
    for (std::size_t j = 0; j < states_.size(); ++j) {
      batch.requests.push_back(next_correlated_request(model_, states_[j], rngs_[j]));
    }
    return batch;
  }

 private:
  const GroupedCorrelatedModel& model_;
  std::vector<StreamState> states_;
  std::vector<CounterRng> rngs_;
  std::uint64_t slot_ = 0;
};

class SequenceSource final : public RequestSource {
 public:
  explicit SequenceSource(const std::vector<RequestBatch>& batches) : batches_(batches) {}

  RequestBatch next() override {
    if (next_ >= batches_.size()) {
      throw ConfigError("sequence workload exhausted after " + std::to_string(batches_.size()) +
                        " batches");
    }
    RequestBatch batch = batches_[next_++];
    batch.slot = next_;
    return batch;
  }

 private:
  const std::vector<RequestBatch>& batches_;
  std::size_t next_ = 0;
};

}  // namespace

IidWorkload::IidWorkload(std::vector<double> pmf, std::size_t m) : sampler_(pmf), m_(m) {
  if (m == 0) {
    throw ConfigError("cache count must be positive");
  }
}

std::unique_ptr<RequestSource> IidWorkload::open(std::uint64_t seed) const {
  return std::make_unique<IidSource>(sampler_, m_, seed);
}

CorrelatedWorkload::CorrelatedWorkload(GroupedCorrelatedModel model, std::size_t m)
    : model_(std::move(model)), m_(m) {
  if (m == 0) {
    throw ConfigError("cache count must be positive");
  }
}

std::unique_ptr<RequestSource> CorrelatedWorkload::open(std::uint64_t seed) const {
  return std::make_unique<CorrelatedSource>(model_, m_, seed);
}

SequenceWorkload::SequenceWorkload(std::vector<RequestBatch> batches, std::size_t n)
    : batches_(std::move(batches)), m_(batches_.empty() ? 0 : batches_.front().size()), n_(n) {
  if (batches_.empty() || m_ == 0) {
    throw ConfigError("sequence workload needs at least one non-empty batch");
  }
  for (std::size_t t = 0; t < batches_.size(); ++t) {
    if (batches_[t].size() != m_) {
      throw ConfigError("batch " + std::to_string(t + 1) + " has " +
                        std::to_string(batches_[t].size()) + " requests, expected " +
                        std::to_string(m_));
    }
    for (ContentId id : batches_[t].requests) {
      if (!in_catalog(id, n_)) {
        throw ConfigError("batch " + std::to_string(t + 1) + " requests content " +
                          std::to_string(id.value) + " outside [1, " + std::to_string(n_) + "]");
      }
    }
  }
}

std::unique_ptr<RequestSource> SequenceWorkload::open(std::uint64_t) const {
  return std::make_unique<SequenceSource>(batches_);
}

}  // namespace mcp
