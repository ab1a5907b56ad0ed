#include "mcp/harness/experiment.hpp"

#include <cmath>

#include "mcp/core/errors.hpp"
#include "mcp/harness/parallel.hpp"
#include "mcp/offline/offline.hpp"
#include "mcp/policies/cmp.hpp"
#include "mcp/policies/lru.hpp"
#include "mcp/policies/rules_compliant.hpp"
#include "mcp/workloads/adversarial.hpp"
#include "mcp/workloads/workload.hpp"
#include "mcp/workloads/zipf.hpp"

namespace mcp {

MeanAndError summarize(std::span<const double> values) {
  MeanAndError out;
  if (values.empty()) {
    return out;
  }
  double sum = 0.0;
  for (double v : values) {
    sum += v;
  }
  const auto n = static_cast<double>(values.size());
  out.mean = sum / n;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) {
      ss += (v - out.mean) * (v - out.mean);
    }
    out.standard_error = std::sqrt(ss / (n - 1.0) / n);
  }
  return out;
}

PreparedExperiment::PreparedExperiment(ExperimentConfig config) : config_(std::move(config)) {
  config_.validate();
  const WorkloadSpec& w = config_.workload;
  const std::size_t m = config_.m;
  const std::size_t k = config_.k;

  switch (w.family) {
    case WorkloadFamily::adversarial: {
      workload_ = std::make_unique<SequenceWorkload>(adversarial::adversarial_stream(w.cycles),
                                                     adversarial::kCatalog);
      policy_ = std::make_unique<RulesCompliantPolicy>(adversarial::kCaches, adversarial::kCatalog,
                                                       adversarial::kCapacity,
                                                       adversarial::initial_bank());
      return;
    }
    case WorkloadFamily::zipf: {
      ZipfPopularity zipf = zipf_pmf(w.n, w.beta);
      request_popularity_ = zipf.catalog();
      workload_ = std::make_unique<IidWorkload>(zipf, m);
      break;
    }
    case WorkloadFamily::correlated: {
      GroupedCorrelatedModel model(w.n, w.group_size, w.beta, w.gamma);
      ptilde_ = estimate_ptilde(model, config_.ptilde_samples, config_.ptilde_seed);
      request_popularity_ = ptilde_->marginal();
      workload_ = std::make_unique<CorrelatedWorkload>(std::move(model), m);
      break;
    }
  }

  switch (config_.policy) {
    case PolicyKind::cmp: {
      CatalogPopularity ranking = ptilde_ ? ptilde_->ranking() : request_popularity_;
      policy_ = std::make_unique<CmpPolicy>(std::move(ranking), m, k, config_.cmp_start);
      break;
    }
    case PolicyKind::lru:
      policy_ = std::make_unique<LruPolicy>(m, w.n, k);
      break;
    case PolicyKind::rules_compliant:
      policy_ = std::make_unique<RulesCompliantPolicy>(m, w.n, k);
      break;
  }
}

std::uint64_t PreparedExperiment::slots() const {
  if (auto len = workload_->length(); len && config_.workload.family == WorkloadFamily::adversarial) {
    return *len;
  }
  return config_.slots;
}

std::uint64_t PreparedExperiment::warmup() const {
  if (config_.workload.family == WorkloadFamily::adversarial) {
    return 0;
  }
  return config_.effective_warmup();
}

double PreparedExperiment::opt_bound(std::uint64_t slots) const {
  if (config_.workload.family == WorkloadFamily::adversarial) {
    return static_cast<double>(adversarial_offline_schedule(config_.workload.cycles).total_faults);
  }
  return opt_bound_faults(request_popularity_, config_.m, config_.k, slots);
}

SimulationResult PreparedExperiment::simulate(std::uint64_t seed,
                                              const SimulationOptions& options) const {
  SimulationOptions opts = options;
  opts.warmup_slots = warmup();
  if (opts.warmup_slots >= slots()) {
    throw ConfigError("warm-up of " + std::to_string(opts.warmup_slots) +
                      " slots leaves nothing to measure in " + std::to_string(slots()));
  }
  return run_simulation(*policy_, *workload_, slots(), seed, opts);
}

SeedOutcome PreparedExperiment::run(std::uint64_t seed, const SimulationOptions& extra) const {
  const SimulationResult sim = simulate(seed, extra);
  SeedOutcome out;
  out.seed = seed;
  out.total_faults = sim.ledger.total();
  out.faults = sim.ledger.total_after_warmup();
  out.measured_slots = sim.ledger.slots() - sim.ledger.warmup_slots();
  out.rate = sim.ledger.rate_after_warmup();
  out.opt_bound = opt_bound(out.measured_slots);
  if (out.opt_bound > 0.0) {
    out.ratio = static_cast<double>(out.faults) / out.opt_bound;
  }
  return out;
}

std::vector<RequestBatch> PreparedExperiment::batches(std::uint64_t seed) const {
  auto source = workload_->open(seed);
  std::vector<RequestBatch> out;
  out.reserve(slots());
  for (std::uint64_t t = 0; t < slots(); ++t) {
    out.push_back(source->next());
  }
  return out;
}

std::vector<SeedOutcome> run_experiment(const PreparedExperiment& experiment) {
  const auto& seeds = experiment.config().seeds;
  return parallel_map(seeds.size(), experiment.config().threads,
                      [&](std::size_t i) { return experiment.run(seeds[i]); });
}

}  // namespace mcp
