#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <sstream>

#include "mcp/core/cache_state.hpp"
#include "mcp/core/errors.hpp"
#include "mcp/core/fault_ledger.hpp"
#include "mcp/core/format.hpp"
#include "mcp/core/matching.hpp"
#include "mcp/core/numeric.hpp"
#include "mcp/core/rng.hpp"
#include "mcp/core/service.hpp"
#include "mcp/core/simulation.hpp"
#include "mcp/policies/cmp.hpp"
#include "mcp/policies/lru.hpp"
#include "mcp/workloads/workload.hpp"
#include "mcp/workloads/zipf.hpp"

namespace mcp {
namespace {

ContentId C(std::uint32_t v) { return ContentId(v); }

RequestBatch batch(std::uint64_t slot, std::vector<std::uint32_t> ids) {
  RequestBatch b;
  b.slot = slot;
  for (auto id : ids) {
    b.requests.push_back(C(id));
  }
  return b;
}

TEST(Matching, RejectsNonPermutations) {
  EXPECT_THROW(Matching({0, 0}), std::invalid_argument);
  EXPECT_THROW(Matching({0, 2}), std::invalid_argument);
  const Matching m({2, 0, 1});
  EXPECT_EQ(m.cache_for(0), 2u);
  EXPECT_EQ(m.request_for(2), 0u);
  EXPECT_EQ(m.request_for(0), 1u);
  EXPECT_EQ(Matching::identity(3), Matching({0, 1, 2}));
}

TEST(CacheState, InsertEraseAndOrdering) {
  CacheState cache(2);
  cache.insert(C(5), 1);
  cache.insert(C(3), 1);
  EXPECT_TRUE(cache.full());
  EXPECT_THROW(cache.insert(C(4), 2), ProtocolError);
  EXPECT_THROW(cache.erase(C(9)), InvalidEvictionError);
  // Same arrival slot: insertion order decides.
  EXPECT_EQ(cache.oldest_arrival(), C(5));
  cache.touch(C(5), 3);
  EXPECT_EQ(cache.least_recently_used(), C(3));
  cache.erase(C(3));
  EXPECT_THROW(cache.insert(C(5), 4), ProtocolError);
  EXPECT_EQ(cache.contents(), std::vector<ContentId>{C(5)});
}

TEST(CacheState, LeastRecentlyUsedTiesGoToEarlierArrival) {
  CacheState cache(3);
  cache.insert(C(1), 2);
  cache.insert(C(2), 1);
  cache.insert(C(3), 1);
  cache.touch(C(1), 4);
  cache.touch(C(2), 4);
  cache.touch(C(3), 4);
  EXPECT_EQ(cache.least_recently_used(), C(2));
}

TEST(CacheBank, PreloadedKeepsOldestFirstOrder) {
  const std::array<std::vector<ContentId>, 2> lists{std::vector{C(1), C(2)},
                                                     std::vector{C(2), C(3)}};
  const auto bank = CacheBankState::preloaded(lists, 3);
  EXPECT_EQ(bank.size(), 2u);
  EXPECT_EQ(bank[0].oldest_arrival(), C(1));
  EXPECT_EQ(bank[1].oldest_arrival(), C(2));
  EXPECT_EQ(bank.distinct_contents(), 3u);
  EXPECT_EQ(bank.slot_clock, 0u);
}

TEST(ApplyService, HitsMissesAndProtocolErrors) {
  const std::array<std::vector<ContentId>, 2> lists{std::vector{C(1), C(2)},
                                                     std::vector{C(3)}};
  const auto bank = CacheBankState::preloaded(lists, 2);
  const auto identity = Matching::identity(2);

  using Ev = std::vector<std::optional<ContentId>>;
  auto r = apply_service(bank, batch(1, {1, 4}), identity, Ev{std::nullopt, std::nullopt});
  EXPECT_EQ(r.faults, 1u);
  EXPECT_TRUE(r.outcomes[0].hit);
  EXPECT_FALSE(r.outcomes[1].hit);
  EXPECT_TRUE(r.bank[1].contains(C(4)));
  EXPECT_EQ(r.bank.slot_clock, 1u);
  EXPECT_FALSE(bank[1].contains(C(4)));

  // Full cache without a victim.
  EXPECT_THROW(apply_service(bank, batch(1, {5, 3}), identity, Ev{std::nullopt, std::nullopt}),
               ProtocolError);
  // Victim named on a hit.
  EXPECT_THROW(apply_service(bank, batch(1, {1, 3}), identity, Ev{C(2), std::nullopt}),
               ProtocolError);
  // Victim not cached.
  EXPECT_THROW(apply_service(bank, batch(1, {5, 3}), identity, Ev{C(7), std::nullopt}),
               InvalidEvictionError);
  // Wrong lengths.
  EXPECT_THROW(apply_service(bank, batch(1, {5}), identity, Ev{C(1), std::nullopt}),
               ProtocolError);

  auto swapped = apply_service(bank, batch(1, {3, 1}), Matching({1, 0}),
                               Ev{std::nullopt, std::nullopt});
  EXPECT_EQ(swapped.faults, 0u);
  auto evict = apply_service(bank, batch(1, {5, 3}), identity, Ev{C(1), std::nullopt});
  EXPECT_EQ(evict.faults, 1u);
  EXPECT_EQ(evict.outcomes[0].evicted, C(1));
  EXPECT_EQ(evict.bank[0].contents(), (std::vector{C(2), C(5)}));
}

TEST(FaultLedger, WarmupSplit) {
  FaultLedger ledger(2, 2);
  for (std::size_t f : {2, 1, 0, 1}) {
    ledger.record(f);
  }
  EXPECT_EQ(ledger.total(), 4u);
  EXPECT_EQ(ledger.total_after_warmup(), 1u);
  EXPECT_DOUBLE_EQ(ledger.rate_after_warmup(), 0.5);
  FaultLedger short_run(1, 3);
  short_run.record(1);
  EXPECT_THROW(short_run.rate_after_warmup(), std::logic_error);
}

TEST(CounterRng, KeyedStreamsAreReproducibleAndDistinct) {
  CounterRng a(7, 1, 2);
  CounterRng b(7, 1, 2);
  CounterRng c(7, 2, 1);
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    EXPECT_EQ(x, b());
    EXPECT_NE(x, c());
  }
}

TEST(CounterRng, UniformBelowIsUnbiased) {
  CounterRng rng(11, 0);
  constexpr std::uint64_t kBins = 7;
  constexpr int kDraws = 70000;
  std::array<int, kBins> counts{};
  for (int i = 0; i < kDraws; ++i) {
    const auto v = rng.uniform_below(kBins);
    ASSERT_LT(v, kBins);
    ++counts[v];
  }
  double chi2 = 0.0;
  const double expected = static_cast<double>(kDraws) / kBins;
  for (int c : counts) {
    chi2 += (c - expected) * (c - expected) / expected;
  }
  // 6 degrees of freedom; 0.999 quantile is 22.46.
  EXPECT_LT(chi2, 22.46);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(CompensatedSum, RecoversLostLowOrderBits) {
  CompensatedSum s;
  s += 1.0;
  for (int i = 0; i < 1000; ++i) {
    s += 1e-16;
  }
  EXPECT_NEAR(s.value(), 1.0 + 1e-13, 1e-16);
}

TEST(Format, ShortestRoundTrip) {
  EXPECT_EQ(format_real(2.0), "2.0");
  EXPECT_EQ(format_real(0.1), "0.1");
  EXPECT_EQ(format_real(-3.0), "-3.0");
  EXPECT_EQ(format_optional(std::optional<double>{}), "");
  EXPECT_EQ(format_value(std::uint64_t{42}), "42");
}

TEST(Simulation, SameSeedSameTrace) {
  const IidWorkload workload(zipf_pmf(50, 0.9), 3);
  const LruPolicy policy(3, 50, 5);
  SimulationOptions options;
  options.record_trace = true;
  const auto a = run_simulation(policy, workload, 200, 9, options);
  const auto b = run_simulation(policy, workload, 200, 9, options);
  const auto c = run_simulation(policy, workload, 200, 10, options);
  EXPECT_EQ(a.trace, b.trace);
  EXPECT_EQ(a.ledger, b.ledger);
  EXPECT_NE(a.trace, c.trace);
  EXPECT_EQ(a.trace.rows().size(), 600u);

  std::ostringstream csv_a;
  std::ostringstream csv_b;
  a.trace.write_csv(csv_a);
  b.trace.write_csv(csv_b);
  EXPECT_EQ(csv_a.str(), csv_b.str());
  EXPECT_EQ(csv_a.str().substr(0, csv_a.str().find('\n')), "slot,cache,request,hit,evicted");
}

TEST(Simulation, TraceAgreesWithLedger) {
  const IidWorkload workload(zipf_pmf(30, 1.1), 2);
  const LruPolicy policy(2, 30, 4);
  SimulationOptions options;
  options.record_trace = true;
  options.warmup_slots = 10;
  std::size_t observed = 0;
  options.observer = [&](const CacheBankState& bank, const RequestBatch& b, std::size_t faults) {
    observed += faults;
    EXPECT_EQ(bank.slot_clock, b.slot);
  };
  const auto r = run_simulation(policy, workload, 100, 3, options);
  std::size_t misses = 0;
  for (const auto& row : r.trace.rows()) {
    misses += row.hit ? 0 : 1;
  }
  EXPECT_EQ(misses, r.ledger.total());
  EXPECT_EQ(observed, r.ledger.total());
  EXPECT_EQ(r.ledger.warmup_slots(), 10u);
}

TEST(Simulation, DimensionMismatchIsAConfigError) {
  const IidWorkload workload(zipf_pmf(30, 1.1), 2);
  const LruPolicy wrong_m(3, 30, 4);
  const LruPolicy wrong_n(2, 31, 4);
  EXPECT_THROW(run_simulation(wrong_m, workload, 10, 1), ConfigError);
  EXPECT_THROW(run_simulation(wrong_n, workload, 10, 1), ConfigError);
}

TEST(Simulation, FullCatalogInEveryCacheNeverFaults) {
  const auto zipf = zipf_pmf(4, 0.0);
  const IidWorkload workload(zipf, 1);
  const CmpPolicy policy(zipf.catalog(), 1, 4);
  EXPECT_EQ(run_simulation(policy, workload, 100, 1).ledger.total(), 0u);
}

}  // namespace
}  // namespace mcp
