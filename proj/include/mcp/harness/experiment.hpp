#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "mcp/core/policy.hpp"
#include "mcp/core/simulation.hpp"
#include "mcp/harness/config.hpp"
#include "mcp/workloads/correlated.hpp"
#include "mcp/workloads/popularity.hpp"

namespace mcp {

struct SeedOutcome {
  std::uint64_t seed = 0;
  std::uint64_t total_faults = 0;    // every slot, compulsory misses included
  std::uint64_t faults = 0;          // slots after the warm-up prefix
  std::uint64_t measured_slots = 0;  // slots after the warm-up prefix
  double rate = 0.0;                 // faults / measured_slots
  double opt_bound = 0.0;            // offline lower bound over the measured slots
  std::optional<double> ratio;       // faults / opt_bound when the bound is positive
};

struct MeanAndError {
  double mean = 0.0;
  double standard_error = 0.0;
};

/// Sample mean and standard error (n - 1 variance); a single value has zero error.
MeanAndError summarize(std::span<const double> values);

/// A validated config with its policy and workload built once, ready to be
/// run for any number of seeds (concurrently: run() is const).
class PreparedExperiment {
 public:
  /// Throws ConfigError for invalid configs.
  explicit PreparedExperiment(ExperimentConfig config);

  const ExperimentConfig& config() const { return config_; }
  const Policy& policy() const { return *policy_; }
  const Workload& workload() const { return *workload_; }

  /// Per-request popularity that the offline lower bound is evaluated on:
  /// the Zipf pmf, or p~ / E[L] under correlated arrivals.
  const CatalogPopularity& request_popularity() const { return request_popularity_; }
  const std::optional<PtildeEstimate>& ptilde() const { return ptilde_; }

  std::uint64_t slots() const;
  std::uint64_t warmup() const;

  /// Offline lower bound over `slots` slots (exact two faults for the
  /// adversarial stream, whatever the horizon).
  double opt_bound(std::uint64_t slots) const;

  SeedOutcome run(std::uint64_t seed, const SimulationOptions& extra = {}) const;
  SimulationResult simulate(std::uint64_t seed, const SimulationOptions& options) const;

  /// The batches the workload produces for `seed` over the run horizon.
  std::vector<RequestBatch> batches(std::uint64_t seed) const;

 private:
  ExperimentConfig config_;
  std::optional<PtildeEstimate> ptilde_;
  CatalogPopularity request_popularity_;
  std::unique_ptr<Workload> workload_;
  std::unique_ptr<Policy> policy_;
};

/// Runs every seed of `config` (in parallel, results in seed order).
std::vector<SeedOutcome> run_experiment(const PreparedExperiment& experiment);

}  // namespace mcp
