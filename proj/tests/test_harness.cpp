#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mcp/core/errors.hpp"
#include "mcp/harness/config.hpp"
#include "mcp/harness/experiment.hpp"
#include "mcp/harness/parallel.hpp"
#include "mcp/harness/presets.hpp"

namespace mcp {
namespace {

std::string error_message(const auto& fn) {
  try {
    fn();
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

TEST(Config, ParsesKeyValueLines) {
  std::istringstream in(
      "# experiment\n"
      "policy = lru\n"
      "\n"
      "  n=500   # trailing comment\n"
      "beta = 1.2\n"
      "seeds = 1..3\n"
      "k = 7\n");
  const auto lines = parse_config(in, "exp.cfg");
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[1].key, "n");
  EXPECT_EQ(lines[1].value, "500");
  EXPECT_EQ(lines[1].line, 4u);

  ExperimentConfig c;
  apply_config(c, lines, "exp.cfg");
  EXPECT_EQ(c.policy, PolicyKind::lru);
  EXPECT_EQ(c.workload.n, 500u);
  EXPECT_DOUBLE_EQ(c.workload.beta, 1.2);
  EXPECT_EQ(c.seeds, (std::vector<std::uint64_t>{1, 2, 3}));
  EXPECT_EQ(c.effective_warmup(), 7u);
}

TEST(Config, ErrorsCarryLineNumbers) {
  std::istringstream syntax("policy = cmp\nthis line is wrong\n");
  EXPECT_EQ(error_message([&] { parse_config(syntax, "a.cfg"); }).rfind("a.cfg:2:", 0), 0u);

  std::istringstream value("m = 2\nk = -4\n");
  const auto lines = parse_config(value, "b.cfg");
  ExperimentConfig c;
  EXPECT_EQ(error_message([&] { apply_config(c, lines, "b.cfg"); }).rfind("b.cfg:2:", 0), 0u);

  std::istringstream unknown("colour = blue\n");
  const auto unknown_lines = parse_config(unknown, "c.cfg");
  EXPECT_NE(error_message([&] { apply_config(c, unknown_lines, "c.cfg"); }).find("colour"),
            std::string::npos);
  EXPECT_THROW(read_config_file("/nonexistent/file.cfg"), ConfigError);
}

TEST(Config, Validation) {
  ExperimentConfig c;
  EXPECT_NO_THROW(c.validate());
  c.m = 0;
  EXPECT_THROW(c.validate(), ConfigError);
  c = ExperimentConfig{};
  c.seeds.clear();
  EXPECT_THROW(c.validate(), ConfigError);
  c = ExperimentConfig{};
  c.k = c.workload.n + 1;
  EXPECT_THROW(c.validate(), ConfigError);
  c = ExperimentConfig{};
  c.slots = 0;
  EXPECT_THROW(c.validate(), ConfigError);
  c = ExperimentConfig{};
  c.workload.family = WorkloadFamily::adversarial;
  c.policy = PolicyKind::cmp;
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(Config, Lists) {
  EXPECT_EQ(parse_seed_list("4"), (std::vector<std::uint64_t>{4}));
  EXPECT_EQ(parse_seed_list("1,5,2"), (std::vector<std::uint64_t>{1, 5, 2}));
  EXPECT_EQ(parse_seed_list("3..5"), (std::vector<std::uint64_t>{3, 4, 5}));
  EXPECT_THROW(parse_seed_list("5..3"), ConfigError);
  EXPECT_THROW(parse_seed_list(""), ConfigError);
  EXPECT_THROW(parse_seed_list("x"), ConfigError);
  EXPECT_EQ(parse_size_list("10, 20"), (std::vector<std::size_t>{10, 20}));
  EXPECT_EQ(parse_real_list("0.8,1.2"), (std::vector<double>{0.8, 1.2}));
  EXPECT_THROW(parse_real_list("0.8,,1"), ConfigError);
}

TEST(Presets, DefaultGrids) {
  const auto fig3 = expand_preset(PresetName::fig3);
  EXPECT_EQ(fig3.points.size(), 5u * 3u * 3u);
  for (const auto& p : fig3.points) {
    EXPECT_EQ(p.m, 10u);
    EXPECT_EQ(p.slots, 10000u);
    EXPECT_EQ(p.seeds.size(), 20u);
    EXPECT_EQ(p.effective_warmup(), p.k);
    EXPECT_EQ(p.policy, PolicyKind::cmp);
  }
  const auto fig4 = expand_preset(PresetName::fig4);
  for (const auto& p : fig4.points) {
    EXPECT_EQ(p.workload.n, 10000u);
  }
  const auto fig5 = expand_preset(PresetName::fig5);
  std::size_t lru = 0;
  for (const auto& p : fig5.points) {
    lru += p.policy == PolicyKind::lru ? 1 : 0;
    EXPECT_GT(p.workload.beta, 1.0);
  }
  EXPECT_EQ(2 * lru, fig5.points.size());
  EXPECT_THROW(parse_preset("fig6"), ConfigError);
  EXPECT_EQ(parse_preset("fig4"), PresetName::fig4);
}

TEST(Presets, AdversarialRunsAreCumulative) {
  PresetOverrides o;
  o.cycles = 17;
  const auto rows = run_preset(expand_preset(PresetName::adversarial, o));
  ASSERT_EQ(rows.size(), 103u);
  EXPECT_DOUBLE_EQ(rows.front().faults, 2.0);
  EXPECT_DOUBLE_EQ(rows.back().faults, 104.0);
  EXPECT_DOUBLE_EQ(rows.back().opt_bound, 2.0);
  EXPECT_DOUBLE_EQ(*rows.back().ratio, 52.0);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_DOUBLE_EQ(rows[i].faults, rows[i - 1].faults + 1.0);
  }
}

std::string preset_csv(std::size_t threads) {
  PresetOverrides o;
  o.n = {500, 2000};
  o.k = {5, 20};
  o.beta = {0.8, 1.2};
  o.slots = 300;
  o.seeds = {1, 2, 3};
  const auto rows = run_preset(expand_preset(PresetName::fig3, o), threads);
  std::ostringstream out;
  write_preset_csv(out, rows);
  return out.str();
}

TEST(Presets, CsvIsByteIdenticalAcrossRunsAndThreadCounts) {
  const auto a = preset_csv(1);
  EXPECT_EQ(a, preset_csv(1));
  EXPECT_EQ(a, preset_csv(4));
  EXPECT_EQ(a.substr(0, a.find('\n')),
            "preset,policy,n,m,k,beta,slots,warmup,seed,faults,opt_bound,ratio");
  // 8 points x (3 seeds + mean + se) rows plus the header.
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 1 + 8 * 5);
}

TEST(Presets, PlotDataUsesSummaryRows) {
  PresetOverrides o;
  o.beta = {1.2, 2.0};
  o.k = {5};
  o.n = {1000};
  o.slots = 200;
  o.seeds = {1, 2};
  const auto rows = run_preset(expand_preset(PresetName::fig5, o));
  std::ostringstream out;
  write_plot_data(out, PresetName::fig5, rows);
  const auto text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "x,y,series");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 4);
}

TEST(Experiment, SeedOutcomeArithmetic) {
  ExperimentConfig c;
  c.workload.n = 200;
  c.workload.beta = 1.0;
  c.m = 2;
  c.k = 10;
  c.slots = 500;
  c.seeds = {4, 5};
  const PreparedExperiment e(c);
  const auto outcomes = run_experiment(e);
  ASSERT_EQ(outcomes.size(), 2u);
  for (const auto& o : outcomes) {
    EXPECT_EQ(o.measured_slots, 490u);
    EXPECT_DOUBLE_EQ(o.rate, static_cast<double>(o.faults) / 490.0);
    EXPECT_DOUBLE_EQ(*o.ratio, static_cast<double>(o.faults) / o.opt_bound);
    EXPECT_LE(o.faults, o.total_faults);
  }
  EXPECT_EQ(outcomes[0].seed, 4u);
  EXPECT_EQ(e.run(4).faults, outcomes[0].faults);
}

TEST(Experiment, CorrelatedCmpRanksByEstimatedPtilde) {
  ExperimentConfig c;
  c.workload.family = WorkloadFamily::correlated;
  c.workload.n = 100;
  c.workload.group_size = 10;
  c.workload.beta = 1.2;
  c.m = 2;
  c.k = 10;
  c.slots = 200;
  c.ptilde_samples = 20000;
  const PreparedExperiment e(c);
  ASSERT_TRUE(e.ptilde().has_value());
  // The first group holds the ten most popular contents.
  for (std::size_t r = 1; r <= 10; ++r) {
    EXPECT_LE(e.request_popularity().at_rank(r).value, 10u);
  }
  EXPECT_GT(e.run(1).opt_bound, 0.0);
}

TEST(Summaries, MeanAndStandardError) {
  const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
  const auto s = summarize(v);
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  EXPECT_NEAR(s.standard_error, std::sqrt(5.0 / 3.0 / 4.0), 1e-15);
  const std::vector<double> one{7.0};
  EXPECT_DOUBLE_EQ(summarize(one).standard_error, 0.0);
}

TEST(ParallelMap, OrderedResultsAndErrors) {
  const auto squares = parallel_map(50, 4, [](std::size_t i) { return i * i; });
  for (std::size_t i = 0; i < squares.size(); ++i) {
    EXPECT_EQ(squares[i], i * i);
  }
  EXPECT_THROW(parallel_map(20, 3,
                            [](std::size_t i) -> int {
                              if (i == 7) {
                                throw std::runtime_error("boom");
                              }
                              return 0;
                            }),
               std::runtime_error);
}

}  // namespace
}  // namespace mcp
