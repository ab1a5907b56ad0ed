#include "mcp/workloads/correlated.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mcp/core/errors.hpp"

namespace mcp {

namespace {

CategoricalSampler make_group_sampler(const ZipfPopularity& law) { return CategoricalSampler(law.pmf); }

ZipfPopularity checked_group_law(std::size_t n, std::size_t b, double beta, double gamma) {
  if (n == 0) {
    throw ConfigError("empty catalog: n must be at least 1");
  }
  if (b == 0 || n % b != 0) {
    throw ConfigError("group size b=" + std::to_string(b) + " must divide n=" + std::to_string(n));
  }
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw ConfigError("geometric parameter gamma must lie in (0, 1]");
  }
  return zipf_pmf(n / b, beta);
}

}  // namespace

GroupedCorrelatedModel::GroupedCorrelatedModel(std::size_t n, std::size_t group_size,
                                               double beta, double gamma)
    : n_(n),
      b_(group_size),
      beta_(beta),
      gamma_(gamma),
      group_law_(checked_group_law(n, group_size, beta, gamma)),
      group_sampler_(make_group_sampler(group_law_)) {}

std::size_t GroupedCorrelatedModel::draw_geometric(CounterRng& rng, std::size_t cap) const {
  if (gamma_ >= 1.0) {
    return 1;
  }
  // Inversion: y = 1 + floor(ln U / ln(1 - gamma)), U in (0, 1].
  const double u = 1.0 - rng.uniform01();
  const double y = 1.0 + std::floor(std::log(u) / std::log1p(-gamma_));
  if (!(y < static_cast<double>(cap))) {
    return cap;
  }
  return static_cast<std::size_t>(y);
}

std::vector<ContentId> GroupedCorrelatedModel::draw_subsequence(CounterRng& rng) const {
  const std::size_t group = group_sampler_.sample(rng.uniform01()).value;  // 1-based
  const std::size_t length = draw_geometric(rng, b_);

  // Partial Fisher-Yates over the group's b members.
  std::vector<std::uint32_t> members(b_);
  std::iota(members.begin(), members.end(), static_cast<std::uint32_t>((group - 1) * b_ + 1));
  std::vector<ContentId> out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    const std::size_t pick = i + rng.uniform_below(b_ - i);
    std::swap(members[i], members[pick]);
    out.emplace_back(members[i]);
  }
  return out;
}

ContentId next_correlated_request(const GroupedCorrelatedModel& model, StreamState& state,
                                  CounterRng& rng) {
  if (state.position >= state.subsequence.size()) {
    state.subsequence = model.draw_subsequence(rng);
    state.position = 0;
  }
  const ContentId out = state.subsequence[state.position++];
  if (state.position == state.subsequence.size()) {
    ++state.completed;
  }
  return out;
}

std::vector<double> PtildeEstimate::descending() const { return ranking().descending(); }

CatalogPopularity PtildeEstimate::marginal() const {
  std::vector<double> p(ptilde);
  for (double& x : p) {
    x /= mean_length;
  }
  return CatalogPopularity(std::move(p));
}

PtildeEstimate estimate_ptilde(const GroupedCorrelatedModel& model, std::uint64_t samples,
                               std::uint64_t seed) {
  if (samples == 0) {
    throw ConfigError("p~ estimation needs at least one sample");
  }
  std::vector<std::uint64_t> counts(model.catalog(), 0);
  CounterRng rng(seed, 0x7074696C6465ULL);
  double sum_len = 0.0;
  double sum_len_sq = 0.0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const auto sub = model.draw_subsequence(rng);
    for (ContentId id : sub) {
      ++counts[catalog_index(id)];
    }
    const auto len = static_cast<double>(sub.size());
    sum_len += len;
    sum_len_sq += len * len;
  }
  const auto count = static_cast<double>(samples);
  PtildeEstimate est;
  est.ptilde.resize(model.catalog());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    est.ptilde[i] = static_cast<double>(counts[i]) / count;
  }
  est.mean_length = sum_len / count;
  if (samples > 1) {
    const double var = (sum_len_sq - count * est.mean_length * est.mean_length) / (count - 1.0);
    est.mean_length_se = std::sqrt(std::max(var, 0.0) / count);
  }
  return est;
}

CompletedEstimate estimate_completed_subsequences(const GroupedCorrelatedModel& model,
                                                  std::size_t m, std::uint64_t slots,
                                                  std::uint64_t runs, std::uint64_t seed) {
  if (runs == 0 || m == 0) {
    throw ConfigError("E[Z(T)] estimation needs m >= 1 and at least one run");
  }
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::uint64_t r = 0; r < runs; ++r) {
    std::uint64_t z = 0;
    for (std::size_t j = 0; j < m; ++j) {
      CounterRng rng(seed, r, j);
      StreamState state;
      for (std::uint64_t t = 0; t < slots; ++t) {
        next_correlated_request(model, state, rng);
      }
      z += state.completed;
    }
    const auto zd = static_cast<double>(z);
    sum += zd;
    sum_sq += zd * zd;
  }
  const auto n = static_cast<double>(runs);
  CompletedEstimate est;
  est.mean = sum / n;
  if (runs > 1) {
    const double var = (sum_sq - n * est.mean * est.mean) / (n - 1.0);
    est.standard_error = std::sqrt(std::max(var, 0.0) / n);
  }
  return est;
}

}  // namespace mcp
