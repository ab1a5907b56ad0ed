// Command-line front end: simulate, bounds, adversarial, preset, ptilde.
//
// Exit codes: 0 success, 1 unexpected failure, 2 usage or config error,
// 3 exhaustive search refused by its budget.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mcp/bounds/bounds.hpp"
#include "mcp/core/errors.hpp"
#include "mcp/core/format.hpp"
#include "mcp/harness/config.hpp"
#include "mcp/harness/experiment.hpp"
#include "mcp/harness/parallel.hpp"
#include "mcp/harness/presets.hpp"
#include "mcp/offline/offline.hpp"
#include "mcp/workloads/adversarial.hpp"
#include "mcp/workloads/correlated.hpp"

namespace {

using namespace mcp;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitBudget = 3;

/// Either a file opened for writing or std::cout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) {
        throw ConfigError("cannot open '" + path + "' for writing");
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void check_format(const std::string& format) {
  if (format != "csv" && format != "text") {
    throw ConfigError("--format must be 'csv' or 'text'");
  }
}

// Flags that map one-to-one onto config keys. Each is registered as a plain
// string and applied through apply_setting after the config file, so flags
// override the file and share its parser.
struct SettingFlags {
  std::map<std::string, std::string> values;

  void add(CLI::App& app, const std::string& flag, const std::string& key,
           const std::string& help) {
    app.add_option_function<std::string>(
        flag, [this, key](const std::string& v) { values[key] = v; }, help);
  }

  void apply(ExperimentConfig& config) const {
    for (const auto& [key, value] : values) {
      apply_setting(config, key, value);
    }
  }
};

// ---------------------------------------------------------------------------
// simulate

struct SimulateArgs {
  std::string config_path;
  std::string format = "csv";
  bool exact_opt = false;
  SettingFlags flags;
};

int run_simulate(const SimulateArgs& args) {
  check_format(args.format);
  ExperimentConfig config;
  if (!args.config_path.empty()) {
    apply_config(config, read_config_file(args.config_path), args.config_path);
  }
  args.flags.apply(config);
  const PreparedExperiment experiment(config);

  std::vector<SeedOutcome> outcomes = run_experiment(experiment);
  std::vector<std::optional<std::uint64_t>> exact(outcomes.size());
  if (args.exact_opt) {
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      const auto batches = experiment.batches(outcomes[i].seed);
      exact[i] = brute_force_opt(batches, config.m, config.k, experiment.workload().catalog(),
                                 experiment.policy().initial_bank())
                     .total_faults;
    }
  }
  if (!config.trace.empty()) {
    SimulationOptions options;
    options.record_trace = true;
    const auto sim = experiment.simulate(config.seeds.front(), options);
    std::ofstream trace(config.trace, std::ios::binary);
    if (!trace) {
      throw ConfigError("cannot open '" + config.trace + "' for writing");
    }
    sim.trace.write_csv(trace);
  }

  Output out(config.output);
  std::ostream& os = out.stream();
  if (args.format == "text") {
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      const auto& o = outcomes[i];
      os << "seed " << o.seed << ": faults = " << o.total_faults
         << ", after warm-up = " << o.faults << " over " << o.measured_slots
         << " slots, opt_bound = " << format_real(o.opt_bound)
         << ", ratio = " << (o.ratio ? format_real(*o.ratio) : std::string("undefined"));
      if (exact[i]) {
        os << ", exact offline faults = " << *exact[i] << " (all slots)";
      }
      os << '\n';
    }
    return kExitOk;
  }
  os << "policy,workload,n,m,k,slots,warmup,seed,total_faults,faults,opt_bound,ratio";
  if (args.exact_opt) {
    os << ",opt_exact";
  }
  os << '\n';
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    os << to_string(config.policy) << ',' << to_string(config.workload.family) << ','
       << experiment.workload().catalog() << ',' << experiment.workload().caches() << ','
       << experiment.policy().dimensions().capacity << ',' << experiment.slots() << ','
       << experiment.warmup() << ',' << o.seed << ',' << o.total_faults << ',' << o.faults
       << ',' << format_real(o.opt_bound) << ',' << format_optional(o.ratio);
    if (args.exact_opt) {
      os << ',' << format_optional(exact[i]);
    }
    os << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bounds

struct BoundsArgs {
  std::string n = "10000";
  std::string m = "10";
  std::string k = "100";
  std::string beta = "0.8";
  std::optional<std::size_t> group_size;
  double gamma = 0.5;
  std::optional<std::uint64_t> horizon;
  std::uint64_t ptilde_samples = 1000000;
  std::uint64_t z_runs = 200;
  std::uint64_t seed = 1;
  std::string output;
  std::optional<std::string> format;
  std::size_t threads = 0;
};

void print_report_text(std::ostream& os, const BoundReport& r) {
  auto line = [&](const char* key, const std::optional<double>& value) {
    os << key << " = " << (value ? format_real(*value) : std::string("undefined")) << '\n';
  };
  line("cmp_rate_lower", r.cmp_rate_lower);
  line("cmp_rate_upper", r.cmp_rate_upper);
  line("opt_rate_lower", r.opt_rate_lower);
  line("cr_upper", r.cr_upper);
  if (r.params.group_size) {
    line("penalty_factor", r.penalty_factor);
  }
  line("scaling_reference", r.scaling_reference);
}

int run_bounds(const BoundsArgs& args) {
  const auto ns = parse_size_list(args.n);
  const auto ms = parse_size_list(args.m);
  const auto ks = parse_size_list(args.k);
  const auto betas = parse_real_list(args.beta);

  struct Point {
    std::size_t n, m, k;
    double beta;
  };
  std::vector<Point> points;
  for (auto n : ns) {
    for (auto m : ms) {
      for (auto k : ks) {
        for (auto beta : betas) {
          if (m == 0 || k == 0 || k > n) {
            throw ConfigError("bounds need m >= 1 and 1 <= k <= n");
          }
          points.push_back({n, m, k, beta});
        }
      }
    }
  }

  const std::string format =
      args.format.value_or(points.size() == 1 && args.output.empty() ? "text" : "csv");
  check_format(format);

  std::vector<BoundReport> reports;
  if (!args.group_size) {
    for (const auto& p : points) {
      reports.push_back(evaluate_iid(p.n, p.m, p.k, p.beta, args.horizon));
    }
  } else {
    const std::uint64_t horizon = args.horizon.value_or(10000);
    reports = parallel_map(points.size(), args.threads, [&](std::size_t i) {
      const Point& p = points[i];
      const GroupedCorrelatedModel model(p.n, *args.group_size, p.beta, args.gamma);
      const auto est = estimate_ptilde(model, args.ptilde_samples, args.seed);
      const auto z = estimate_completed_subsequences(model, p.m, horizon, args.z_runs, args.seed);
      BoundParams params;
      params.n = p.n;
      params.m = p.m;
      params.k = p.k;
      params.beta = p.beta;
      params.group_size = *args.group_size;
      params.gamma = args.gamma;
      params.horizon = horizon;
      return evaluate_correlated(params, est.descending(), est.mean_length, z.mean);
    });
  }

  Output out(args.output);
  std::ostream& os = out.stream();
  if (format == "text") {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (reports.size() > 1) {
        os << (i ? "\n" : "") << "# n=" << points[i].n << " m=" << points[i].m
           << " k=" << points[i].k << " beta=" << format_real(points[i].beta) << '\n';
      }
      print_report_text(os, reports[i]);
    }
    return kExitOk;
  }
  write_bound_header(os);
  for (const auto& r : reports) {
    write_bound_row(os, r);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// adversarial

struct AdversarialArgs {
  std::size_t cycles = 17;
  std::string output;
  std::string schedule;
  std::string trace;
};

int run_adversarial(const AdversarialArgs& args) {
  const auto stream = adversarial::adversarial_stream(args.cycles);
  ExperimentConfig config;
  config.policy = PolicyKind::rules_compliant;
  config.workload.family = WorkloadFamily::adversarial;
  config.workload.cycles = args.cycles;
  config.workload.n = adversarial::kCatalog;
  config.m = adversarial::kCaches;
  config.k = adversarial::kCapacity;
  const PreparedExperiment experiment(config);
  SimulationOptions options;
  options.record_trace = !args.trace.empty();
  const auto sim = experiment.simulate(1, options);
  const auto offline = adversarial_offline_schedule(stream);

  if (!args.output.empty()) {
    Output out(args.output);
    adversarial::write_stream_csv(out.stream(), stream);
  }
  if (!args.schedule.empty()) {
    Output out(args.schedule);
    write_schedule_csv(out.stream(), offline);
  }
  if (!args.trace.empty()) {
    Output out(args.trace);
    sim.trace.write_csv(out.stream());
  }

  const auto online = sim.ledger.total();
  std::cout << "batches = " << stream.size() << '\n'
            << "online_faults = " << online << '\n'
            << "offline_faults = " << offline.total_faults << '\n'
            << "ratio = "
            << format_real(static_cast<double>(online) / static_cast<double>(offline.total_faults))
            << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// preset

struct PresetArgs {
  std::string name;
  std::string config_path;
  std::string output;
  std::string plot_data;
  std::map<std::string, std::string> axes;
  std::size_t threads = 0;
};

PresetOverrides build_overrides(const PresetArgs& args) {
  std::map<std::string, std::string> settings;
  if (!args.config_path.empty()) {
    for (const auto& line : read_config_file(args.config_path)) {
      settings[line.key] = line.value;
    }
  }
  for (const auto& [key, value] : args.axes) {
    settings[key] = value;
  }

  PresetOverrides o;
  o.threads = args.threads;
  for (const auto& [key, value] : settings) {
    if (key == "n") {
      o.n = parse_size_list(value);
    } else if (key == "m") {
      o.m = parse_size_list(value);
    } else if (key == "k") {
      o.k = parse_size_list(value);
    } else if (key == "beta") {
      o.beta = parse_real_list(value);
    } else if (key == "slots") {
      o.slots = parse_size_list(value).at(0);
    } else if (key == "seeds" || key == "seed") {
      o.seeds = parse_seed_list(value);
    } else if (key == "warmup") {
      o.warmup = parse_size_list(value).at(0);
    } else if (key == "cycles") {
      o.cycles = parse_size_list(value).at(0);
    } else if (key == "threads") {
      o.threads = parse_size_list(value).at(0);
    } else if (key == "policy") {
      std::vector<PolicyKind> policies;
      for (const auto& name : CLI::detail::split(value, ',')) {
        ExperimentConfig scratch;
        apply_setting(scratch, "policy", name);
        policies.push_back(scratch.policy);
      }
      o.policies = policies;
    } else {
      throw ConfigError("key '" + key + "' cannot override a preset");
    }
  }
  return o;
}

int run_preset_command(const PresetArgs& args) {
  const PresetName name = parse_preset(args.name);
  const PresetGrid grid = expand_preset(name, build_overrides(args));
  const auto rows = run_preset(grid, args.threads);
  {
    Output out(args.output);
    write_preset_csv(out.stream(), rows);
  }
  if (!args.plot_data.empty()) {
    Output plot(args.plot_data);
    write_plot_data(plot.stream(), name, rows);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// ptilde

struct PtildeArgs {
  std::size_t n = 100;
  std::size_t group_size = 10;
  double beta = 1.2;
  double gamma = 0.5;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 1;
  std::string output;
};

int run_ptilde(const PtildeArgs& args) {
  const GroupedCorrelatedModel model(args.n, args.group_size, args.beta, args.gamma);
  const auto est = estimate_ptilde(model, args.samples, args.seed);
  const CatalogPopularity ranking = est.ranking();
  {
    Output out(args.output);
    std::ostream& os = out.stream();
    os << "rank,content,ptilde,marginal\n";
    for (std::size_t r = 1; r <= ranking.size(); ++r) {
      const ContentId c = ranking.at_rank(r);
      const double p = est.ptilde[catalog_index(c)];
      os << r << ',' << c.value << ',' << format_real(p) << ','
         << format_real(p / est.mean_length) << '\n';
    }
  }
  std::cerr << "mean_length = " << format_real(est.mean_length)
            << " (se " << format_real(est.mean_length_se) << ")\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-cache paging simulator and bound evaluator"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Run one policy/workload configuration");
  simulate->add_option("--config", sim.config_path, "key = value config file");
  simulate->add_option("--format", sim.format, "csv or text");
  simulate->add_flag("--exact-opt", sim.exact_opt,
                     "Also compute the exact offline optimum (tiny instances only)");
  sim.flags.add(*simulate, "--policy", "policy", "cmp, lru or rules_compliant");
  sim.flags.add(*simulate, "--workload", "workload", "zipf, correlated or adversarial");
  sim.flags.add(*simulate, "--n", "n", "Catalog size");
  sim.flags.add(*simulate, "--beta", "beta", "Zipf exponent");
  sim.flags.add(*simulate, "--b", "b", "Group size (correlated)");
  sim.flags.add(*simulate, "--gamma", "gamma", "Geometric parameter (correlated)");
  sim.flags.add(*simulate, "--m", "m", "Number of caches");
  sim.flags.add(*simulate, "--k", "k", "Cache capacity");
  sim.flags.add(*simulate, "--slots", "slots", "Time slots T");
  sim.flags.add(*simulate, "--seed,--seeds", "seeds", "Seed list: 1,2,3 or 1..20");
  sim.flags.add(*simulate, "--warmup", "warmup", "Slots excluded from the rate (default k)");
  sim.flags.add(*simulate, "--cycles", "cycles", "Adversarial cycles");
  sim.flags.add(*simulate, "--cmp-start", "cmp_start", "preloaded or empty");
  sim.flags.add(*simulate, "--ptilde-samples", "ptilde_samples", "Subsequences for p~");
  sim.flags.add(*simulate, "--ptilde-seed", "ptilde_seed", "Seed for p~");
  sim.flags.add(*simulate, "--threads", "threads", "Worker threads (0 = all cores)");
  sim.flags.add(*simulate, "--out", "out", "Output path (default stdout)");
  sim.flags.add(*simulate, "--trace", "trace", "Per-request trace CSV for the first seed");

  BoundsArgs bnd;
  auto* bounds = app.add_subcommand("bounds", "Evaluate the closed-form bounds on a grid");
  bounds->add_option("--n", bnd.n, "Catalog sizes");
  bounds->add_option("--m", bnd.m, "Cache counts");
  bounds->add_option("--k", bnd.k, "Capacities");
  bounds->add_option("--beta", bnd.beta, "Zipf exponents");
  bounds->add_option("--b", bnd.group_size, "Group size; switches to the correlated bound");
  bounds->add_option("--gamma", bnd.gamma, "Geometric parameter (correlated)");
  bounds->add_option("--slots,--T", bnd.horizon, "Horizon T");
  bounds->add_option("--ptilde-samples", bnd.ptilde_samples, "Subsequences for p~");
  bounds->add_option("--z-runs", bnd.z_runs, "Replications for E[Z(T)]");
  bounds->add_option("--seed", bnd.seed, "Monte-Carlo seed");
  bounds->add_option("--threads", bnd.threads, "Worker threads (0 = all cores)");
  bounds->add_option("--out", bnd.output, "Output path (default stdout)");
  bounds->add_option("--format", bnd.format, "csv or text");

  AdversarialArgs adv;
  auto* adversarial = app.add_subcommand(
      "adversarial", "Rules-compliant policy against the two-cache adversarial stream");
  adversarial->add_option("--cycles", adv.cycles, "Number of six-batch cycles");
  adversarial->add_option("--out", adv.output, "Stream CSV (slot,r1,r2)");
  adversarial->add_option("--schedule", adv.schedule, "Offline schedule CSV");
  adversarial->add_option("--trace", adv.trace, "Online trace CSV");

  PresetArgs pre;
  auto* preset = app.add_subcommand("preset", "Run a named experiment grid");
  preset->add_option("name", pre.name, "fig3, fig4, fig5 or adversarial")->required();
  preset->add_option("--config", pre.config_path, "key = value overrides");
  preset->add_option("--out", pre.output, "CSV path (default stdout)");
  preset->add_option("--plot-data", pre.plot_data, "x,y,series CSV path");
  preset->add_option("--threads", pre.threads, "Worker threads (0 = all cores)");
  for (const char* key : {"n", "m", "k", "beta", "slots", "warmup", "cycles", "policy"}) {
    preset->add_option_function<std::string>(
        std::string("--") + key, [&pre, key](const std::string& v) { pre.axes[key] = v; },
        "Override (comma-separated list)");
  }
  preset->add_option_function<std::string>(
      "--seed,--seeds", [&pre](const std::string& v) { pre.axes["seeds"] = v; },
      "Seed list: 1,2,3 or 1..20");
  std::string preset_format = "csv";
  preset->add_option("--format", preset_format, "csv");

  PtildeArgs pt;
  auto* ptilde = app.add_subcommand("ptilde", "Monte-Carlo p~ table for the grouped model");
  ptilde->add_option("--n", pt.n, "Catalog size");
  ptilde->add_option("--b", pt.group_size, "Group size");
  ptilde->add_option("--beta", pt.beta, "Group Zipf exponent");
  ptilde->add_option("--gamma", pt.gamma, "Geometric parameter");
  ptilde->add_option("--samples", pt.samples, "Subsequences");
  ptilde->add_option("--seed", pt.seed, "Seed");
  ptilde->add_option("--out", pt.output, "Output path (default stdout)");
  std::string ptilde_format = "csv";
  ptilde->add_option("--format", ptilde_format, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (*simulate) {
      return run_simulate(sim);
    }
    if (*bounds) {
      return run_bounds(bnd);
    }
    if (*adversarial) {
      return run_adversarial(adv);
    }
    if (*preset) {
      if (preset_format != "csv") {
        throw ConfigError("preset output is csv only");
      }
      return run_preset_command(pre);
    }
    if (*ptilde) {
      if (ptilde_format != "csv") {
        throw ConfigError("ptilde output is csv only");
      }
      return run_ptilde(pt);
    }
  } catch (const BudgetError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const UndefinedBoundError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "fatal: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
