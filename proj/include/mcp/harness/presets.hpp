#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "mcp/harness/config.hpp"

namespace mcp {

enum class PresetName { fig3, fig4, fig5, adversarial };

std::string_view to_string(PresetName name);
/// Throws ConfigError listing the known presets.
PresetName parse_preset(std::string_view text);

/// Partial config applied on top of a preset's defaults. Lists replace the
/// preset's axis entirely.
struct PresetOverrides {
  std::optional<std::vector<std::size_t>> n;
  std::optional<std::vector<std::size_t>> m;
  std::optional<std::vector<std::size_t>> k;
  std::optional<std::vector<double>> beta;
  std::optional<std::vector<PolicyKind>> policies;
  std::optional<std::uint64_t> slots;
  std::optional<std::vector<std::uint64_t>> seeds;
  std::optional<std::uint64_t> warmup;
  std::optional<std::size_t> cycles;
  std::size_t threads = 0;
};

/// A preset expanded to concrete runs, in output order.
struct PresetGrid {
  PresetName name = PresetName::fig3;
  std::vector<ExperimentConfig> points;  // one per grid point, each with every seed
};

/// Default grids:
///   fig3        cmp, m = 10, n x k x beta
///   fig4        cmp, n = 10^4, m x k x beta
///   fig5        cmp and lru, m = 10, n x k x beta (beta > 1)
///   adversarial rules_compliant on the two-cache adversarial stream
/// All Zipf presets default to T = 10^4, 20 seeds and a k-slot warm-up.
PresetGrid expand_preset(PresetName name, const PresetOverrides& overrides = {});

/// One CSV row. `seed` holds a seed number or "mean" / "se" for the
/// per-point summary rows. Adversarial rows are one per batch count, with
/// cumulative online faults against the offline schedule's faults.
struct PresetRow {
  std::string preset;
  PolicyKind policy = PolicyKind::cmp;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::optional<double> beta;
  std::uint64_t slots = 0;
  std::uint64_t warmup = 0;
  std::string seed;
  double faults = 0.0;
  double opt_bound = 0.0;
  std::optional<double> ratio;

  /// faults / (m * (slots - warmup)); the fraction of requests that missed.
  double fault_fraction() const;
};

/// Runs every (point, seed) pair concurrently; rows come back ordered by
/// grid index, then seed, then the mean and se rows.
std::vector<PresetRow> run_preset(const PresetGrid& grid, std::size_t threads = 0);

/// Columns: preset,policy,n,m,k,beta,slots,warmup,seed,faults,opt_bound,ratio
void write_preset_csv(std::ostream& out, const std::vector<PresetRow>& rows);

/// Columns: x,y,series built from the summary rows (per-batch rows for the
/// adversarial preset). x is n (fig3), m (fig4), beta (fig5) or the batch
/// count; y is the mean ratio, or the mean fault fraction for fig5.
void write_plot_data(std::ostream& out, PresetName name, const std::vector<PresetRow>& rows);

}  // namespace mcp
