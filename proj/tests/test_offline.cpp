#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "mcp/core/errors.hpp"
#include "mcp/core/rng.hpp"
#include "mcp/core/simulation.hpp"
#include "mcp/offline/offline.hpp"
#include "mcp/policies/cmp.hpp"
#include "mcp/policies/lru.hpp"
#include "mcp/policies/rules_compliant.hpp"
#include "mcp/workloads/adversarial.hpp"
#include "mcp/workloads/workload.hpp"
#include "mcp/workloads/zipf.hpp"

namespace mcp {
namespace {

// Minimum faults for one cache by trying every victim on every miss.
std::uint64_t exhaustive_single_cache(const std::vector<ContentId>& seq, std::size_t pos,
                                      std::set<ContentId> cache, std::size_t k) {
  if (pos == seq.size()) {
    return 0;
  }
  const ContentId c = seq[pos];
  if (cache.contains(c)) {
    return exhaustive_single_cache(seq, pos + 1, std::move(cache), k);
  }
  if (cache.size() < k) {
    cache.insert(c);
    return 1 + exhaustive_single_cache(seq, pos + 1, std::move(cache), k);
  }
  std::uint64_t best = ~std::uint64_t{0};
  for (const ContentId victim : cache) {
    auto next = cache;
    next.erase(victim);
    next.insert(c);
    best = std::min(best, exhaustive_single_cache(seq, pos + 1, std::move(next), k));
  }
  return 1 + best;
}

std::vector<ContentId> random_sequence(CounterRng& rng, std::size_t len, std::size_t n) {
  std::vector<ContentId> seq;
  for (std::size_t i = 0; i < len; ++i) {
    seq.emplace_back(1 + static_cast<std::uint32_t>(rng.uniform_below(n)));
  }
  return seq;
}

std::vector<RequestBatch> as_batches(const std::vector<ContentId>& seq) {
  std::vector<RequestBatch> out;
  for (std::size_t t = 0; t < seq.size(); ++t) {
    out.push_back(RequestBatch{t + 1, {seq[t]}});
  }
  return out;
}

TEST(Belady, OptimalAgainstExhaustiveSearch) {
  CounterRng rng(21, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng.uniform_below(5);
    const std::size_t k = 1 + rng.uniform_below(3);
    const auto seq = random_sequence(rng, 1 + rng.uniform_below(10), n);
    std::vector<ContentId> initial;
    if (rng.uniform_below(2) == 1) {
      for (std::uint32_t c = 1; c <= k && c <= n; ++c) {
        initial.emplace_back(c);
      }
    }
    const auto schedule = belady(seq, k, initial);
    EXPECT_EQ(schedule.total_faults,
              exhaustive_single_cache(seq, 0, {initial.begin(), initial.end()}, k));
    const std::array<std::vector<ContentId>, 1> lists{initial};
    EXPECT_EQ(replay_schedule(CacheBankState::preloaded(lists, k), as_batches(seq), schedule),
              schedule.total_faults);
  }
}

TEST(Belady, EvictsTheFurthestNextUse) {
  const std::vector<ContentId> seq{ContentId(1), ContentId(2), ContentId(3), ContentId(1),
                                   ContentId(2)};
  const auto s = belady(seq, 2);
  EXPECT_EQ(s.total_faults, 4u);
  EXPECT_EQ(s.decisions[2].evictions[0], ContentId(2));
}

TEST(BruteForceOpt, EqualsBeladyForOneCache) {
  CounterRng rng(31, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.uniform_below(5);
    const std::size_t k = 1 + rng.uniform_below(3);
    const auto seq = random_sequence(rng, 1 + rng.uniform_below(8), n);
    const auto opt =
        brute_force_opt(as_batches(seq), 1, k, n, CacheBankState::empty(1, k));
    EXPECT_EQ(opt.total_faults, belady(seq, k).total_faults);
  }
}

TEST(BruteForceOpt, NeverWorseThanOnlinePolicies) {
  CounterRng rng(41, 0);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng.uniform_below(4);
    const std::size_t k = 1 + rng.uniform_below(3);
    const std::size_t m = 1 + rng.uniform_below(3);
    const std::uint64_t slots = 1 + rng.uniform_below(8);
    const auto zipf = zipf_pmf(n, 0.7);
    const IidWorkload workload(zipf, m);
    const LruPolicy lru(m, n, k);
    const RulesCompliantPolicy rules(m, n, k);
    const CmpPolicy cmp(zipf.catalog(), m, k, CmpStart::empty);
    const std::uint64_t seed = rng();

    auto source = workload.open(seed);
    std::vector<RequestBatch> batches;
    for (std::uint64_t t = 0; t < slots; ++t) {
      batches.push_back(source->next());
    }
    const auto opt = brute_force_opt(batches, m, k, n, CacheBankState::empty(m, k));
    EXPECT_EQ(replay_schedule(CacheBankState::empty(m, k), batches, opt), opt.total_faults);
    for (const Policy* p : std::initializer_list<const Policy*>{&lru, &rules, &cmp}) {
      EXPECT_LE(opt.total_faults, run_simulation(*p, workload, slots, seed).ledger.total())
          << p->name();
    }
  }
}

TEST(BruteForceOpt, RefusesLargeInstances) {
  const auto seq = as_batches(std::vector<ContentId>(9, ContentId(1)));
  EXPECT_THROW(brute_force_opt(seq, 1, 2, 4, CacheBankState::empty(1, 2)), BudgetError);
  EXPECT_THROW(brute_force_opt(as_batches({ContentId(1)}), 1, 2, 7, CacheBankState::empty(1, 2)),
               BudgetError);
  SearchBudget wide;
  wide.max_slots = 9;
  EXPECT_EQ(brute_force_opt(seq, 1, 2, 4, CacheBankState::empty(1, 2), wide).total_faults, 1u);
}

TEST(AdversarialSchedule, TwoFaultsForAnyLength) {
  using namespace adversarial;
  for (std::size_t cycles : {0, 1, 5, 40}) {
    const auto stream = adversarial_stream(cycles);
    const auto schedule = adversarial_offline_schedule(stream);
    EXPECT_EQ(schedule.total_faults, 2u);
    EXPECT_EQ(schedule.decisions.size(), stream.size());
    EXPECT_EQ(replay_schedule(initial_bank(), stream, schedule), 2u);
  }
}

TEST(AdversarialSchedule, MatchesExhaustiveOptimumOnShortStreams) {
  using namespace adversarial;
  // Exhaustive search over ten contents is outside the default budget; the
  // stream is short enough to widen it.
  SearchBudget budget{kCatalog, kCapacity, kCaches, 7};
  const auto stream = adversarial_stream(1);
  EXPECT_EQ(brute_force_opt(stream, kCaches, kCapacity, kCatalog, initial_bank(), budget)
                .total_faults,
            2u);
}

TEST(AdversarialSchedule, RejectsForeignStreams) {
  auto stream = adversarial::adversarial_stream(2);
  stream[3].requests[1] = adversarial::x1;
  EXPECT_THROW(adversarial_offline_schedule(stream), ScheduleMismatchError);
}

TEST(Schedule, CsvColumns) {
  std::ostringstream out;
  write_schedule_csv(out, adversarial_offline_schedule(1));
  const auto text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "slot,request_pos,cache,evicted");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 2 * 7);
}

TEST(OptBound, UniformHandValue) {
  const auto pop = zipf_pmf(4, 0.0).catalog();
  EXPECT_DOUBLE_EQ(opt_bound_faults(pop, 2, 1, 100), 100.0);
  EXPECT_DOUBLE_EQ(opt_bound_faults(pop, 2, 2, 100), 0.0);
}

}  // namespace
}  // namespace mcp
