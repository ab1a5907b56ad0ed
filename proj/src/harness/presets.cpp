#include "mcp/harness/presets.hpp"

#include <memory>

#include "mcp/core/errors.hpp"
#include "mcp/core/format.hpp"
#include "mcp/core/service.hpp"
#include "mcp/harness/experiment.hpp"
#include "mcp/harness/parallel.hpp"
#include "mcp/offline/offline.hpp"
#include "mcp/workloads/adversarial.hpp"

namespace mcp {
namespace {

constexpr std::uint64_t kDefaultSlots = 10000;
constexpr std::uint64_t kDefaultSeedCount = 20;

std::vector<std::uint64_t> default_seeds() {
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = 1; s <= kDefaultSeedCount; ++s) {
    seeds.push_back(s);
  }
  return seeds;
}

template <class T>
std::vector<T> axis(const std::optional<std::vector<T>>& override_values, std::vector<T> fallback) {
  return override_values ? *override_values : std::move(fallback);
}

std::vector<PresetRow> run_adversarial(const ExperimentConfig& config) {
  const PreparedExperiment experiment(config);
  std::vector<std::size_t> per_slot;
  SimulationOptions options;
  options.observer = [&](const CacheBankState&, const RequestBatch&, std::size_t faults) {
    per_slot.push_back(faults);
  };
  const std::uint64_t seed = config.seeds.front();
  experiment.simulate(seed, options);
  const auto offline = adversarial_offline_schedule(config.workload.cycles);
  const auto stream = adversarial::adversarial_stream(config.workload.cycles);
  std::vector<std::uint64_t> offline_cumulative;
  CacheBankState bank = adversarial::initial_bank();
  std::uint64_t offline_total = 0;
  for (std::size_t t = 0; t < stream.size(); ++t) {
    auto served = apply_service(std::move(bank), stream[t], offline.decisions[t].matching,
                                offline.decisions[t].evictions);
    offline_total += served.faults;
    bank = std::move(served.bank);
    offline_cumulative.push_back(offline_total);
  }

  std::vector<PresetRow> rows;
  std::uint64_t online = 0;
  for (std::size_t t = 0; t < per_slot.size(); ++t) {
    online += per_slot[t];
    PresetRow row;
    row.preset = std::string(to_string(PresetName::adversarial));
    row.policy = config.policy;
    row.n = adversarial::kCatalog;
    row.m = adversarial::kCaches;
    row.k = adversarial::kCapacity;
    row.slots = t + 1;
    row.warmup = 0;
    row.seed = std::to_string(seed);
    row.faults = static_cast<double>(online);
    row.opt_bound = static_cast<double>(offline_cumulative[t]);
    if (row.opt_bound > 0.0) {
      row.ratio = row.faults / row.opt_bound;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string_view to_string(PresetName name) {
  switch (name) {
    case PresetName::fig3:
      return "fig3";
    case PresetName::fig4:
      return "fig4";
    case PresetName::fig5:
      return "fig5";
    case PresetName::adversarial:
      return "adversarial";
  }
  return "?";
}

PresetName parse_preset(std::string_view text) {
  for (auto name : {PresetName::fig3, PresetName::fig4, PresetName::fig5, PresetName::adversarial}) {
    if (text == to_string(name)) {
      return name;
    }
  }
  throw ConfigError("unknown preset '" + std::string(text) +
                    "' (expected fig3, fig4, fig5 or adversarial)");
}

double PresetRow::fault_fraction() const {
  const auto measured = static_cast<double>(slots - warmup);
  return faults / (static_cast<double>(m) * measured);
}

PresetGrid expand_preset(PresetName name, const PresetOverrides& overrides) {
  PresetGrid grid;
  grid.name = name;

  ExperimentConfig base;
  base.preset = std::string(to_string(name));
  base.slots = overrides.slots.value_or(kDefaultSlots);
  base.seeds = overrides.seeds.value_or(default_seeds());
  base.warmup = overrides.warmup;
  base.threads = overrides.threads;

  if (name == PresetName::adversarial) {
    ExperimentConfig config = base;
    config.policy = PolicyKind::rules_compliant;
    config.workload.family = WorkloadFamily::adversarial;
    config.workload.cycles = overrides.cycles.value_or(17);
    config.workload.n = adversarial::kCatalog;
    config.m = adversarial::kCaches;
    config.k = adversarial::kCapacity;
    config.seeds = {config.seeds.front()};
    config.validate();
    grid.points.push_back(std::move(config));
    return grid;
  }

  std::vector<std::size_t> ns;
  std::vector<std::size_t> ms;
  std::vector<std::size_t> ks = axis(overrides.k, {10, 50, 100});
  std::vector<double> betas;
  std::vector<PolicyKind> policies = axis(overrides.policies, {PolicyKind::cmp});
  switch (name) {
    case PresetName::fig3:
      ns = axis(overrides.n, {2000, 5000, 10000, 20000, 50000});
      ms = axis(overrides.m, {10});
      betas = axis(overrides.beta, {0.8, 1.2, 1.6});
      break;
    case PresetName::fig4:
      ns = axis(overrides.n, {10000});
      ms = axis(overrides.m, {1, 2, 5, 10, 20, 50});
      betas = axis(overrides.beta, {0.8, 1.2, 1.6});
      break;
    case PresetName::fig5:
      ns = axis(overrides.n, {10000});
      ms = axis(overrides.m, {10});
      betas = axis(overrides.beta, {1.2, 1.4, 1.6, 2.0});
      policies = axis(overrides.policies, {PolicyKind::cmp, PolicyKind::lru});
      break;
    case PresetName::adversarial:
      break;
  }

  for (auto policy : policies) {
    for (auto n : ns) {
      for (auto m : ms) {
        for (auto k : ks) {
          for (auto beta : betas) {
            ExperimentConfig config = base;
            config.policy = policy;
            config.workload.family = WorkloadFamily::zipf;
            config.workload.n = n;
            config.workload.beta = beta;
            config.m = m;
            config.k = k;
            config.validate();
            grid.points.push_back(std::move(config));
          }
        }
      }
    }
  }
  return grid;
}

std::vector<PresetRow> run_preset(const PresetGrid& grid, std::size_t threads) {
  if (grid.name == PresetName::adversarial) {
    return run_adversarial(grid.points.front());
  }

  std::vector<std::unique_ptr<PreparedExperiment>> prepared =
      parallel_map(grid.points.size(), threads, [&](std::size_t i) {
        return std::make_unique<PreparedExperiment>(grid.points[i]);
      });

  struct Task {
    std::size_t point;
    std::size_t seed_index;
  };
  std::vector<Task> tasks;
  for (std::size_t p = 0; p < grid.points.size(); ++p) {
    for (std::size_t s = 0; s < grid.points[p].seeds.size(); ++s) {
      tasks.push_back({p, s});
    }
  }
  const std::vector<SeedOutcome> outcomes = parallel_map(tasks.size(), threads, [&](std::size_t i) {
    const Task& task = tasks[i];
    return prepared[task.point]->run(grid.points[task.point].seeds[task.seed_index]);
  });

  std::vector<PresetRow> rows;
  std::size_t next = 0;
  for (std::size_t p = 0; p < grid.points.size(); ++p) {
    const ExperimentConfig& config = grid.points[p];
    PresetRow base;
    base.preset = config.preset;
    base.policy = config.policy;
    base.n = config.workload.n;
    base.m = config.m;
    base.k = config.k;
    base.beta = config.workload.beta;
    base.slots = prepared[p]->slots();
    base.warmup = prepared[p]->warmup();

    std::vector<double> faults;
    std::vector<double> bounds;
    std::vector<double> ratios;
    for (std::size_t s = 0; s < config.seeds.size(); ++s) {
      const SeedOutcome& outcome = outcomes[next++];
      PresetRow row = base;
      row.seed = std::to_string(outcome.seed);
      row.faults = static_cast<double>(outcome.faults);
      row.opt_bound = outcome.opt_bound;
      row.ratio = outcome.ratio;
      faults.push_back(row.faults);
      bounds.push_back(row.opt_bound);
      if (row.ratio) {
        ratios.push_back(*row.ratio);
      }
      rows.push_back(std::move(row));
    }

    const auto f = summarize(faults);
    const auto b = summarize(bounds);
    const bool all_ratios = ratios.size() == faults.size();
    const auto r = summarize(ratios);

    PresetRow mean = base;
    mean.seed = "mean";
    mean.faults = f.mean;
    mean.opt_bound = b.mean;
    if (all_ratios) {
      mean.ratio = r.mean;
    }
    PresetRow se = base;
    se.seed = "se";
    se.faults = f.standard_error;
    se.opt_bound = b.standard_error;
    if (all_ratios) {
      se.ratio = r.standard_error;
    }
    rows.push_back(std::move(mean));
    rows.push_back(std::move(se));
  }
  return rows;
}

void write_preset_csv(std::ostream& out, const std::vector<PresetRow>& rows) {
  out << "preset,policy,n,m,k,beta,slots,warmup,seed,faults,opt_bound,ratio\n";
  for (const auto& row : rows) {
    out << row.preset << ',' << to_string(row.policy) << ',' << row.n << ',' << row.m << ','
        << row.k << ',' << format_optional(row.beta) << ',' << row.slots << ',' << row.warmup
        << ',' << row.seed << ',' << format_real(row.faults) << ','
        << format_real(row.opt_bound) << ',' << format_optional(row.ratio) << '\n';
  }
}

void write_plot_data(std::ostream& out, PresetName name, const std::vector<PresetRow>& rows) {
  out << "x,y,series\n";
  if (name == PresetName::adversarial) {
    for (const auto& row : rows) {
      out << row.slots << ',' << format_real(row.faults) << ",online\n";
    }
    for (const auto& row : rows) {
      out << row.slots << ',' << format_real(row.opt_bound) << ",offline\n";
    }
    return;
  }
  for (const auto& row : rows) {
    if (row.seed != "mean") {
      continue;
    }
    const std::string beta = format_optional(row.beta);
    switch (name) {
      case PresetName::fig3:
        out << row.n << ',' << format_optional(row.ratio) << ",k=" << row.k << " beta=" << beta
            << '\n';
        break;
      case PresetName::fig4:
        out << row.m << ',' << format_optional(row.ratio) << ",k=" << row.k << " beta=" << beta
            << '\n';
        break;
      case PresetName::fig5:
        out << beta << ',' << format_real(row.fault_fraction()) << ',' << to_string(row.policy)
            << " n=" << row.n << " k=" << row.k << '\n';
        break;
      case PresetName::adversarial:
        break;
    }
  }
}

}  // namespace mcp
