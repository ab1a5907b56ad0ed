#include "mcp/harness/config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <string>

#include "mcp/core/errors.hpp"
#include "mcp/policies/rules_compliant.hpp"
#include "mcp/workloads/adversarial.hpp"

namespace mcp {

namespace {

constexpr std::array<std::string_view, 19> kKeys = {
    "policy", "workload", "n",       "beta",           "b",           "gamma", "m",
    "k",      "slots",    "seeds",   "seed",           "warmup",      "cycles", "cmp_start",
    "ptilde_samples",     "ptilde_seed", "threads",    "out",         "trace"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_unsigned(std::string_view key, std::string_view text) {
  text = trim(text);
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("'" + std::string(key) + "' expects a non-negative integer, got '" +
                      std::string(text) + "'");
  }
  return value;
}

double parse_real(std::string_view key, std::string_view text) {
  text = trim(text);
  std::string owned(text);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(owned, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (owned.empty() || used != owned.size() || !std::isfinite(value)) {
    throw ConfigError("'" + std::string(key) + "' expects a real number, got '" + owned + "'");
  }
  return value;
}

template <class T, class Parse>
std::vector<T> parse_list(std::string_view text, Parse&& parse) {
  std::vector<T> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse(trim(text.substr(0, comma))));
    if (comma == std::string_view::npos) {
      break;
    }
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

std::string_view to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::cmp:
      return "cmp";
    case PolicyKind::lru:
      return "lru";
    case PolicyKind::rules_compliant:
      return "rules_compliant";
  }
  return "?";
}

std::string_view to_string(WorkloadFamily family) {
  switch (family) {
    case WorkloadFamily::zipf:
      return "zipf";
    case WorkloadFamily::correlated:
      return "correlated";
    case WorkloadFamily::adversarial:
      return "adversarial";
  }
  return "?";
}

std::span<const std::string_view> config_keys() { return kKeys; }

std::vector<std::uint64_t> parse_seed_list(std::string_view text) {
  text = trim(text);
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    const auto lo = parse_unsigned<std::uint64_t>("seeds", text.substr(0, dots));
    const auto hi = parse_unsigned<std::uint64_t>("seeds", text.substr(dots + 2));
    if (hi < lo) {
      throw ConfigError("seed range " + std::string(text) + " is empty");
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = lo; s <= hi; ++s) {
      out.push_back(s);
    }
    return out;
  }
  return parse_list<std::uint64_t>(
      text, [](std::string_view s) { return parse_unsigned<std::uint64_t>("seeds", s); });
}

std::vector<std::size_t> parse_size_list(std::string_view text) {
  return parse_list<std::size_t>(
      text, [](std::string_view s) { return parse_unsigned<std::size_t>("list", s); });
}

std::vector<double> parse_real_list(std::string_view text) {
  return parse_list<double>(text, [](std::string_view s) { return parse_real("list", s); });
}

void apply_setting(ExperimentConfig& c, std::string_view key, std::string_view raw) {
  const std::string_view value = trim(raw);
  if (key == "policy") {
    if (value == "cmp") {
      c.policy = PolicyKind::cmp;
    } else if (value == "lru") {
      c.policy = PolicyKind::lru;
    } else if (value == "rules_compliant") {
      c.policy = PolicyKind::rules_compliant;
    } else {
      throw ConfigError("unknown policy '" + std::string(value) +
                        "' (expected cmp | lru | rules_compliant)");
    }
  } else if (key == "workload") {
    if (value == "zipf") {
      c.workload.family = WorkloadFamily::zipf;
    } else if (value == "correlated") {
      c.workload.family = WorkloadFamily::correlated;
    } else if (value == "adversarial") {
      c.workload.family = WorkloadFamily::adversarial;
    } else {
      throw ConfigError("unknown workload '" + std::string(value) +
                        "' (expected zipf | correlated | adversarial)");
    }
  } else if (key == "n") {
    c.workload.n = parse_unsigned<std::size_t>(key, value);
  } else if (key == "beta") {
    c.workload.beta = parse_real(key, value);
  } else if (key == "b") {
    c.workload.group_size = parse_unsigned<std::size_t>(key, value);
  } else if (key == "gamma") {
    c.workload.gamma = parse_real(key, value);
  } else if (key == "m") {
    c.m = parse_unsigned<std::size_t>(key, value);
  } else if (key == "k") {
    c.k = parse_unsigned<std::size_t>(key, value);
  } else if (key == "slots") {
    c.slots = parse_unsigned<std::uint64_t>(key, value);
  } else if (key == "seeds") {
    c.seeds = parse_seed_list(value);
  } else if (key == "seed") {
    c.seeds = {parse_unsigned<std::uint64_t>(key, value)};
  } else if (key == "warmup") {
    c.warmup = parse_unsigned<std::uint64_t>(key, value);
  } else if (key == "cycles") {
    c.workload.cycles = parse_unsigned<std::size_t>(key, value);
  } else if (key == "cmp_start") {
    if (value == "preloaded") {
      c.cmp_start = CmpStart::preloaded;
    } else if (value == "empty") {
      c.cmp_start = CmpStart::empty;
    } else {
      throw ConfigError("cmp_start must be 'preloaded' or 'empty'");
    }
  } else if (key == "ptilde_samples") {
    c.ptilde_samples = parse_unsigned<std::uint64_t>(key, value);
  } else if (key == "ptilde_seed") {
    c.ptilde_seed = parse_unsigned<std::uint64_t>(key, value);
  } else if (key == "threads") {
    c.threads = parse_unsigned<std::size_t>(key, value);
  } else if (key == "out") {
    c.output = std::string(value);
  } else if (key == "trace") {
    c.trace = std::string(value);
  } else {
    throw ConfigError("unknown key '" + std::string(key) + "'");
  }
}

void ExperimentConfig::validate() const {
  if (m == 0 || k == 0 || workload.n == 0 || slots == 0) {
    throw ConfigError("m, k, n and slots must all be positive");
  }
  if (seeds.empty()) {
    throw ConfigError("at least one seed is required");
  }
  if (workload.family == WorkloadFamily::adversarial) {
    if (policy != PolicyKind::rules_compliant) {
      throw ConfigError("the adversarial workload is defined for policy = rules_compliant");
    }
    return;
  }
  if (k > workload.n) {
    throw ConfigError("k = " + std::to_string(k) + " exceeds n = " + std::to_string(workload.n));
  }
  if (policy == PolicyKind::rules_compliant && m > kRulesCompliantMaxCaches) {
    throw ConfigError("rules_compliant supports at most " +
                      std::to_string(kRulesCompliantMaxCaches) + " caches");
  }
  if (!(workload.beta >= 0.0)) {
    throw ConfigError("beta must be non-negative");
  }
  if (workload.family == WorkloadFamily::correlated) {
    if (workload.group_size == 0 || workload.n % workload.group_size != 0) {
      throw ConfigError("b must divide n");
    }
    if (!(workload.gamma > 0.0 && workload.gamma <= 1.0)) {
      throw ConfigError("gamma must lie in (0, 1]");
    }
    if (ptilde_samples == 0) {
      throw ConfigError("ptilde_samples must be positive");
    }
  }
}

std::vector<ConfigLine> parse_config(std::istream& in, std::string_view source) {
  std::vector<ConfigLine> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string_view line(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    const auto prefix = std::string(source) + ":" + std::to_string(number) + ": ";
    if (eq == std::string_view::npos) {
      throw ConfigError(prefix + "expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) {
      throw ConfigError(prefix + "missing key before '='");
    }
    if (value.empty()) {
      throw ConfigError(prefix + "missing value for '" + key + "'");
    }
    lines.push_back(ConfigLine{key, value, number});
  }
  return lines;
}

std::vector<ConfigLine> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  return parse_config(in, path);
}

void apply_config(ExperimentConfig& config, const std::vector<ConfigLine>& lines,
                  std::string_view source) {
  for (const ConfigLine& line : lines) {
    try {
      apply_setting(config, line.key, line.value);
    } catch (const ConfigError& e) {
      throw ConfigError(std::string(source) + ":" + std::to_string(line.line) + ": " + e.what());
    }
  }
}

}  // namespace mcp
