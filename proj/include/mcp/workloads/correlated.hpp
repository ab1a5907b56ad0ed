#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mcp/core/rng.hpp"
#include "mcp/core/types.hpp"
#include "mcp/workloads/zipf.hpp"

namespace mcp {

/// Grouped time-correlated popularity: n contents split into n/b groups of b
/// consecutive ids. A subsequence picks group l with probability
/// proportional to l^-beta, then min{y, b} distinct contents of that group
/// uniformly at random, where y ~ Geometric(gamma) on {1, 2, ...}.
///
/// b = 1 is accepted as the degenerate case where every subsequence is one
/// content drawn from the group law.
class GroupedCorrelatedModel {
 public:
  /// Throws ConfigError unless b >= 1, b divides n, beta >= 0 and
  /// gamma in (0, 1].
  GroupedCorrelatedModel(std::size_t n, std::size_t group_size, double beta, double gamma);

  std::size_t catalog() const { return n_; }
  std::size_t group_size() const { return b_; }
  std::size_t groups() const { return n_ / b_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }
  const ZipfPopularity& group_law() const { return group_law_; }

  /// y ~ Geometric(gamma), support {1, 2, ...}, capped at `cap`.
  std::size_t draw_geometric(CounterRng& rng, std::size_t cap) const;

  /// One fresh subsequence, in request order.
  std::vector<ContentId> draw_subsequence(CounterRng& rng) const;

 private:
  std::size_t n_;
  std::size_t b_;
  double beta_;
  double gamma_;
  ZipfPopularity group_law_;
  CategoricalSampler group_sampler_;
};

/// Per-stream generator state.
struct StreamState {
  std::vector<ContentId> subsequence;
  std::size_t position = 0;     // next index into `subsequence`
  std::uint64_t completed = 0;  // t_j: subsequences fully emitted so far
};

/// Emits the next request of one stream, drawing a new subsequence when the
/// current one is exhausted. `completed` is bumped when the last content of
/// a subsequence is emitted.
ContentId next_correlated_request(const GroupedCorrelatedModel& model, StreamState& state,
                                  CounterRng& rng);

struct PtildeEstimate {
  std::vector<double> ptilde;  // by content id
  double mean_length = 0.0;    // E[L]
  double mean_length_se = 0.0;

  /// p~ sorted descending, ready for the bound evaluators.
  std::vector<double> descending() const;
  /// Per-request marginal popularity p~_i / E[L].
  CatalogPopularity marginal() const;
  /// Ranking used by CMP under correlated arrivals (by p~).
  CatalogPopularity ranking() const { return CatalogPopularity(ptilde); }
};

/// Monte-Carlo p~_i (expected appearances of C_i per subsequence) and E[L]
/// from `samples` independent subsequences.
PtildeEstimate estimate_ptilde(const GroupedCorrelatedModel& model, std::uint64_t samples,
                               std::uint64_t seed);

struct CompletedEstimate {
  double mean = 0.0;  // E[Z(T)]
  double standard_error = 0.0;
};

/// Monte-Carlo E[Z(T)]: subsequences completed within `slots` slots, summed
/// over m independent streams, averaged over `runs` replications.
CompletedEstimate estimate_completed_subsequences(const GroupedCorrelatedModel& model,
                                                  std::size_t m, std::uint64_t slots,
                                                  std::uint64_t runs, std::uint64_t seed);

}  // namespace mcp
