#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "mcp/core/errors.hpp"
#include "mcp/workloads/adversarial.hpp"
#include "mcp/workloads/correlated.hpp"
#include "mcp/workloads/popularity.hpp"
#include "mcp/workloads/workload.hpp"
#include "mcp/workloads/zipf.hpp"

namespace mcp {
namespace {

using Big = boost::multiprecision::cpp_dec_float_50;

// Head mass sum_{i<=h} p_i computed in 50-digit arithmetic.
double oracle_head_mass(std::size_t n, double beta, std::size_t h) {
  Big head = 0;
  Big total = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const Big term = boost::multiprecision::pow(Big(i), Big(-beta));
    total += term;
    if (i <= h) {
      head += term;
    }
  }
  return static_cast<double>(head / total);
}

TEST(Zipf, MatchesExtendedPrecisionHeadMass) {
  struct Case {
    std::size_t n;
    double beta;
    std::size_t h;
  };
  for (const Case c : {Case{100, 0.8, 10}, Case{1000, 1.2, 50}, Case{10000, 0.8, 100},
                       Case{10000, 1.6, 500}, Case{5000, 2.0, 1}}) {
    const auto zipf = zipf_pmf(c.n, c.beta);
    double head = 0.0;
    for (std::size_t i = 0; i < c.h; ++i) {
      head += zipf.pmf[i];
    }
    EXPECT_NEAR(head, oracle_head_mass(c.n, c.beta, c.h), 1e-10)
        << "n=" << c.n << " beta=" << c.beta;
  }
}

TEST(Zipf, ShapeAndErrors) {
  const auto uniform = zipf_pmf(4, 0.0);
  for (double p : uniform.pmf) {
    EXPECT_DOUBLE_EQ(p, 0.25);
  }
  const auto z = zipf_pmf(200, 1.3);
  double total = 0.0;
  for (std::size_t i = 0; i < z.pmf.size(); ++i) {
    total += z.pmf[i];
    if (i > 0) {
      EXPECT_LT(z.pmf[i], z.pmf[i - 1]);
    }
  }
  EXPECT_NEAR(total, 1.0, 1e-14);
  EXPECT_THROW(zipf_pmf(0, 1.0), ConfigError);
  EXPECT_THROW(zipf_pmf(10, -0.1), ConfigError);
  EXPECT_THROW(zipf_pmf(10, std::nan("")), ConfigError);
}

TEST(CategoricalSampler, InverseCdfBoundaries) {
  const std::vector<double> pmf{0.5, 0.25, 0.25};
  const CategoricalSampler s(pmf);
  EXPECT_EQ(s.sample(0.0), ContentId(1));
  EXPECT_EQ(s.sample(0.49), ContentId(1));
  EXPECT_EQ(s.sample(0.5), ContentId(2));
  EXPECT_EQ(s.sample(0.74), ContentId(2));
  EXPECT_EQ(s.sample(0.75), ContentId(3));
  EXPECT_EQ(s.sample(std::nextafter(1.0, 0.0)), ContentId(3));
}

TEST(CategoricalSampler, EmpiricalFrequenciesMatchPmf) {
  const auto z = zipf_pmf(20, 1.0);
  const CategoricalSampler s(z.pmf);
  constexpr int kSlots = 20000;
  constexpr std::size_t kStreams = 5;
  std::vector<double> counts(20, 0.0);
  for (int t = 1; t <= kSlots; ++t) {
    for (const auto c : sample_iid_batch(s, kStreams, 3, t).requests) {
      counts[catalog_index(c)] += 1.0;
    }
  }
  const double draws = kSlots * kStreams;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double p = z.pmf[i];
    const double sd = std::sqrt(draws * p * (1 - p));
    EXPECT_NEAR(counts[i], draws * p, 5 * sd) << "content " << i + 1;
  }
}

TEST(IidSampling, StreamsReplayIndependently) {
  const auto z = zipf_pmf(100, 0.8);
  const CategoricalSampler s(z.pmf);
  for (std::uint64_t t = 1; t <= 50; ++t) {
    const auto small = sample_iid_batch(s, 3, 17, t);
    const auto large = sample_iid_batch(s, 6, 17, t);
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(small[j], large[j]);
      EXPECT_EQ(small[j], sample_iid_request(s, 17, t, j));
    }
  }
}

TEST(CatalogPopularity, RanksDescendingWithIndexTieBreak) {
  const CatalogPopularity pop({0.1, 0.4, 0.1, 0.4});
  EXPECT_EQ(pop.at_rank(1), ContentId(2));
  EXPECT_EQ(pop.at_rank(2), ContentId(4));
  EXPECT_EQ(pop.at_rank(3), ContentId(1));
  EXPECT_EQ(pop.at_rank(4), ContentId(3));
  EXPECT_EQ(pop.rank(ContentId(3)), 4u);
  EXPECT_EQ(pop.descending(), (std::vector{0.4, 0.4, 0.1, 0.1}));
}

// E[min{y, b}] for y ~ Geometric(gamma) on {1, 2, ...}: sum_{j<b} (1-gamma)^j.
double expected_length(std::size_t b, double gamma) {
  return (1.0 - std::pow(1.0 - gamma, static_cast<double>(b))) / gamma;
}

TEST(GroupedModel, PtildeMatchesClosedForm) {
  const std::size_t n = 60;
  const std::size_t b = 6;
  const double gamma = 0.4;
  const GroupedCorrelatedModel model(n, b, 1.1, gamma);
  constexpr std::uint64_t kSamples = 400000;
  const auto est = estimate_ptilde(model, kSamples, 5);

  const double el = expected_length(b, gamma);
  EXPECT_NEAR(est.mean_length, el, 5 * est.mean_length_se);
  EXPECT_GT(est.mean_length_se, 0.0);

  // Each of the min{y,b} picks is a uniformly random member of the group.
  const auto groups = zipf_pmf(n / b, 1.1);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double exact = groups.pmf[i / b] * el / static_cast<double>(b);
    // Appearances per subsequence are 0/1, so the variance is at most exact.
    EXPECT_NEAR(est.ptilde[i], exact, 5 * std::sqrt(exact / kSamples)) << "content " << i + 1;
    total += est.ptilde[i];
  }
  EXPECT_NEAR(total, est.mean_length, 1e-9);
  const auto marginal = est.marginal();
  double marginal_total = 0.0;
  for (double p : marginal.probabilities()) {
    marginal_total += p;
  }
  EXPECT_NEAR(marginal_total, 1.0, 1e-12);
}

TEST(GroupedModel, SubsequencesStayInOneGroupWithoutRepeats) {
  const GroupedCorrelatedModel model(40, 8, 0.9, 0.3);
  CounterRng rng(3, 0);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto seq = model.draw_subsequence(rng);
    ASSERT_GE(seq.size(), 1u);
    ASSERT_LE(seq.size(), 8u);
    const std::set<ContentId> distinct(seq.begin(), seq.end());
    EXPECT_EQ(distinct.size(), seq.size());
    const auto group = catalog_index(seq.front()) / 8;
    for (auto c : seq) {
      EXPECT_EQ(catalog_index(c) / 8, group);
    }
  }
}

TEST(GroupedModel, GeometricLaw) {
  const GroupedCorrelatedModel model(10, 10, 1.0, 0.3);
  CounterRng rng(8, 0);
  constexpr int kDraws = 100000;
  std::vector<double> counts(6, 0.0);
  for (int i = 0; i < kDraws; ++i) {
    const auto y = model.draw_geometric(rng, 5);
    ASSERT_GE(y, 1u);
    ASSERT_LE(y, 5u);
    counts[y] += 1.0;
  }
  for (std::size_t y = 1; y <= 5; ++y) {
    const double p = y < 5 ? std::pow(0.7, static_cast<double>(y - 1)) * 0.3 : std::pow(0.7, 4.0);
    EXPECT_NEAR(counts[y] / kDraws, p, 5 * std::sqrt(p * (1 - p) / kDraws));
  }
}

TEST(GroupedModel, RejectsBadParameters) {
  EXPECT_THROW(GroupedCorrelatedModel(10, 3, 1.0, 0.5), ConfigError);
  EXPECT_THROW(GroupedCorrelatedModel(10, 0, 1.0, 0.5), ConfigError);
  EXPECT_THROW(GroupedCorrelatedModel(10, 5, 1.0, 0.0), ConfigError);
  EXPECT_THROW(GroupedCorrelatedModel(10, 5, 1.0, 1.5), ConfigError);
  EXPECT_NO_THROW(GroupedCorrelatedModel(10, 1, 1.0, 1.0));
}

TEST(CompletedSubsequences, SingletonGroupsCompleteEverySlot) {
  const GroupedCorrelatedModel model(20, 1, 1.0, 0.5);
  const auto z = estimate_completed_subsequences(model, 3, 500, 4, 1);
  EXPECT_DOUBLE_EQ(z.mean, 3.0 * 500.0);
  EXPECT_DOUBLE_EQ(z.standard_error, 0.0);
}

TEST(CompletedSubsequences, BoundedByLengthRange) {
  const GroupedCorrelatedModel model(100, 10, 1.2, 0.5);
  const std::size_t m = 2;
  const std::uint64_t slots = 1000;
  const auto z = estimate_completed_subsequences(model, m, slots, 50, 9);
  EXPECT_GE(z.mean, static_cast<double>(m * (slots / 10)));
  EXPECT_LE(z.mean, static_cast<double>(m * slots));
  // Renewal approximation: about m T / E[L] completions.
  const double renewal = m * slots / expected_length(10, 0.5);
  EXPECT_NEAR(z.mean, renewal, 0.02 * renewal);
}

TEST(CorrelatedWorkload, StreamCounterMatchesSubsequences) {
  const GroupedCorrelatedModel model(30, 5, 1.0, 0.5);
  StreamState state;
  CounterRng rng(1, 0);
  std::uint64_t emitted = 0;
  while (state.completed < 100) {
    next_correlated_request(model, state, rng);
    ++emitted;
  }
  EXPECT_EQ(state.position, state.subsequence.size());
  EXPECT_GE(emitted, 100u);
  EXPECT_LE(emitted, 500u);

  const CorrelatedWorkload workload(model, 4);
  auto a = workload.open(2);
  auto b = workload.open(2);
  for (int t = 0; t < 100; ++t) {
    EXPECT_EQ(a->next(), b->next());
  }
}

TEST(SequenceWorkload, ValidatesAndRunsOut) {
  using adversarial::adversarial_stream;
  const SequenceWorkload workload(adversarial_stream(1), adversarial::kCatalog);
  EXPECT_EQ(workload.length(), 7u);
  auto src = workload.open(99);
  for (int t = 0; t < 7; ++t) {
    src->next();
  }
  EXPECT_THROW(src->next(), ConfigError);
  EXPECT_THROW(SequenceWorkload(adversarial_stream(1), 9), ConfigError);
}

TEST(AdversarialStream, PrefixThenRepeatedCycle) {
  using namespace adversarial;
  const auto stream = adversarial_stream(3);
  ASSERT_EQ(stream.size(), 19u);
  EXPECT_EQ(stream[0].requests, (std::vector{a1, b1}));
  for (std::size_t t = 0; t < stream.size(); ++t) {
    EXPECT_EQ(stream[t].slot, t + 1);
    ASSERT_EQ(stream[t].size(), 2u);
  }
  const auto cyc = cycle();
  ASSERT_EQ(cyc.size(), 6u);
  for (std::size_t t = 1; t < stream.size(); ++t) {
    const auto& [r1, r2] = cyc[(t - 1) % 6];
    EXPECT_EQ(stream[t][0], r1);
    EXPECT_EQ(stream[t][1], r2);
  }
  const std::vector<std::pair<ContentId, ContentId>> expected{
      {a1, a2}, {b1, b2}, {a1, a3}, {a3, b3}, {a1, a4}, {a3, b4}};
  EXPECT_TRUE(std::equal(cyc.begin(), cyc.end(), expected.begin(), expected.end()));
  EXPECT_EQ(content_name(x1), "x1");
  EXPECT_EQ(content_name(b4), "b4");
  EXPECT_THROW(content_name(ContentId(11)), std::out_of_range);

  std::ostringstream csv;
  write_stream_csv(csv, stream);
  const std::string text = csv.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 20);
  EXPECT_EQ(text.substr(0, 21), "slot,r1,r2\n1,a1,b1\n2,");
}

TEST(AdversarialStream, InitialBank) {
  using namespace adversarial;
  const auto bank = initial_bank();
  EXPECT_EQ(bank[0].contents(), (std::vector{x1, a2, a3, a4}));
  EXPECT_EQ(bank[1].contents(), (std::vector{x2, b2, b3, b4}));
  EXPECT_EQ(bank[0].oldest_arrival(), x1);
  EXPECT_EQ(bank[1].oldest_arrival(), x2);
}

}  // namespace
}  // namespace mcp
