#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcp/policies/cmp.hpp"

namespace mcp {

enum class PolicyKind { cmp, lru, rules_compliant };
enum class WorkloadFamily { zipf, correlated, adversarial };

std::string_view to_string(PolicyKind kind);
std::string_view to_string(WorkloadFamily family);

struct WorkloadSpec {
  WorkloadFamily family = WorkloadFamily::zipf;
  std::size_t n = 10000;
  double beta = 0.8;
  std::size_t group_size = 10;  // b
  double gamma = 0.5;
  std::size_t cycles = 17;  // adversarial only
};

/// One experiment: a policy, a workload, and the run parameters. Loaded from
/// a flat `key = value` file and/or command-line flags (flags win).
struct ExperimentConfig {
  PolicyKind policy = PolicyKind::cmp;
  WorkloadSpec workload;
  std::size_t m = 10;
  std::size_t k = 100;
  std::uint64_t slots = 10000;
  std::vector<std::uint64_t> seeds{1};
  std::optional<std::uint64_t> warmup;  // defaults to k slots
  CmpStart cmp_start = CmpStart::preloaded;
  std::uint64_t ptilde_samples = 1000000;
  std::uint64_t ptilde_seed = 20240101;
  std::size_t threads = 0;  // 0 = hardware concurrency
  std::string output;
  std::string trace;
  std::string preset;

  std::uint64_t effective_warmup() const { return warmup.value_or(k); }

  /// Throws ConfigError when a dimension is zero, seeds are empty, or the
  /// combination cannot run (k > n, adversarial without rules_compliant...).
  void validate() const;
};

/// Known keys, in the order they are documented.
std::span<const std::string_view> config_keys();

/// Sets one key from its textual value. Throws ConfigError on unknown keys
/// or unparsable values.
void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value);

struct ConfigLine {
  std::string key;
  std::string value;
  std::size_t line = 0;
};

/// Parses `key = value` lines; `#` starts a comment. Syntax errors throw
/// ConfigError as "<source>:<line>: message".
std::vector<ConfigLine> parse_config(std::istream& in, std::string_view source);
std::vector<ConfigLine> read_config_file(const std::string& path);

/// Applies parsed lines; value errors are reported with their line number.
void apply_config(ExperimentConfig& config, const std::vector<ConfigLine>& lines,
                  std::string_view source);

/// "1,2,5" or an inclusive range "1..20".
std::vector<std::uint64_t> parse_seed_list(std::string_view text);
std::vector<std::size_t> parse_size_list(std::string_view text);
std::vector<double> parse_real_list(std::string_view text);

}  // namespace mcp
