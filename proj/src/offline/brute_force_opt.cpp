#include <algorithm>
#include <bit>
#include <iostream>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "mcp/core/errors.hpp"
#include "mcp/offline/offline.hpp"

namespace mcp {

namespace {

using Mask = std::uint64_t;

Mask bit(ContentId id) { return Mask{1} << catalog_index(id); }

// Exhaustive search over (slot, multiset of cache contents).
class OptSearch {
 public:
  OptSearch(std::span<const RequestBatch> batches, std::size_t m, std::size_t k)
      : batches_(batches), m_(m), k_(k) {}

  std::uint32_t cost(std::size_t t, std::vector<Mask> bank) {
    if (t == batches_.size()) {
      return 0;
    }
    std::sort(bank.begin(), bank.end());
    std::vector<Mask> key(bank);
    key.push_back(t);
    if (auto it = memo_.find(key); it != memo_.end()) {
      return it->second;
    }
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for_each_move(t, bank, [&](const std::vector<std::size_t>&, const std::vector<Mask>& next,
                               const std::vector<std::optional<ContentId>>&, std::uint32_t faults) {
      if (faults >= best) {
        return false;
      }
      best = std::min(best, faults + cost(t + 1, next));
      return false;
    });
    memo_.emplace(std::move(key), best);
    return best;
  }

  // Calls fn(cache_of_request, next_bank, evictions, faults) for every legal
  // move from `bank` at slot t, in lexicographic order of matching then
  // eviction choices. Stops early when fn returns true.
  template <class Fn>
  bool for_each_move(std::size_t t, const std::vector<Mask>& bank, Fn&& fn) const {
    const RequestBatch& batch = batches_[t];
    std::vector<std::size_t> perm(m_);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      std::vector<std::size_t> misses;  // caches that fault under this matching
      std::uint32_t faults = 0;
      for (std::size_t i = 0; i < m_; ++i) {
        if ((bank[perm[i]] & bit(batch[i])) == 0) {
          misses.push_back(perm[i]);
          ++faults;
        }
      }
      std::vector<Mask> next(bank);
      std::vector<std::optional<ContentId>> evictions(m_);
      for (std::size_t i = 0; i < m_; ++i) {
        if ((bank[perm[i]] & bit(batch[i])) == 0) {
          next[perm[i]] |= bit(batch[i]);
        }
      }
      if (choose_victims(bank, misses, 0, next, evictions, [&] {
            return fn(perm, next, evictions, faults);
          })) {
        return true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  }

 private:
  // Picks a victim for each missing cache that was full before the fetch.
  template <class Fn>
  bool choose_victims(const std::vector<Mask>& before, const std::vector<std::size_t>& misses,
                      std::size_t idx, std::vector<Mask>& next,
                      std::vector<std::optional<ContentId>>& evictions, Fn&& leaf) const {
    if (idx == misses.size()) {
      return leaf();
    }
    const std::size_t j = misses[idx];
    const Mask old = before[j];
    if (static_cast<std::size_t>(std::popcount(old)) < k_) {
      return choose_victims(before, misses, idx + 1, next, evictions, leaf);
    }
    for (Mask rest = old; rest != 0; rest &= rest - 1) {
      const Mask victim = rest & (~rest + 1);
      next[j] &= ~victim;
      evictions[j] = ContentId(static_cast<std::uint32_t>(std::countr_zero(victim)) + 1);
      const bool stop = choose_victims(before, misses, idx + 1, next, evictions, leaf);
      next[j] |= victim;
      evictions[j].reset();
      if (stop) {
        return true;
      }
    }
    return false;
  }

  std::span<const RequestBatch> batches_;
  std::size_t m_;
  std::size_t k_;
  std::map<std::vector<Mask>, std::uint32_t> memo_;
};

}  // namespace

OfflineSchedule brute_force_opt(std::span<const RequestBatch> batches, std::size_t m,
                                std::size_t k, std::size_t n, const CacheBankState& initial,
                                const SearchBudget& budget) {
  if (n > budget.max_catalog || k > budget.max_capacity || m > budget.max_caches ||
      batches.size() > budget.max_slots) {
    throw BudgetError("instance (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                      ", m=" + std::to_string(m) + ", T=" + std::to_string(batches.size()) +
                      ") exceeds the exhaustive-search budget (n<=" +
                      std::to_string(budget.max_catalog) + ", k<=" +
                      std::to_string(budget.max_capacity) + ", m<=" +
                      std::to_string(budget.max_caches) + ", T<=" +
                      std::to_string(budget.max_slots) + ")");
  }
  if (n > 64) {
    throw BudgetError("exhaustive search is limited to n <= 64");
  }
  if (budget != SearchBudget{}) {
    std::clog << "warning: exhaustive offline search above the default budget; cost grows like "
                 "(m! k^m)^T\n";
  }
  if (m == 0 || k == 0 || initial.size() != m) {
    throw ConfigError("initial bank does not match m = " + std::to_string(m));
  }

  std::vector<Mask> bank(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    if (initial[j].capacity() != k || initial[j].size() > k) {
      throw ConfigError("initial cache " + std::to_string(j + 1) + " does not match k");
    }
    for (ContentId id : initial[j].contents()) {
      if (!in_catalog(id, n)) {
        throw ConfigError("initial content " + std::to_string(id.value) + " outside catalog");
      }
      bank[j] |= bit(id);
    }
  }
  for (const RequestBatch& batch : batches) {
    if (batch.size() != m) {
      throw ConfigError("batch length differs from m = " + std::to_string(m));
    }
    for (ContentId id : batch.requests) {
      if (!in_catalog(id, n)) {
        throw ConfigError("request " + std::to_string(id.value) + " outside catalog");
      }
    }
  }

  OptSearch search(batches, m, k);
  OfflineSchedule schedule;
  schedule.total_faults = search.cost(0, bank);

  // Walk forward on the real (unsorted) bank, taking the first move whose
  // cost matches the optimum.
  std::uint32_t remaining = static_cast<std::uint32_t>(schedule.total_faults);
  for (std::size_t t = 0; t < batches.size(); ++t) {
    std::vector<Mask> chosen;
    bool found = search.for_each_move(
        t, bank,
        [&](const std::vector<std::size_t>& perm, const std::vector<Mask>& next,
            const std::vector<std::optional<ContentId>>& evictions, std::uint32_t faults) {
          if (faults > remaining) {
            return false;
          }
          const std::uint32_t rest = search.cost(t + 1, next);
          if (faults + rest != remaining) {
            return false;
          }
          schedule.decisions.push_back(PolicyDecision{Matching(perm), evictions});
          chosen = next;
          remaining = rest;
          return true;
        });
    if (!found) {
      throw std::logic_error("offline search failed to reconstruct an optimal move");
    }
    bank = std::move(chosen);
  }
  return schedule;
}

}  // namespace mcp
