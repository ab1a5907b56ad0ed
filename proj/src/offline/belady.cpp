#include "mcp/offline/offline.hpp"

#include <limits>
#include <string>
#include <unordered_map>

#include "mcp/core/errors.hpp"

namespace mcp {

OfflineSchedule belady(std::span<const ContentId> sequence, std::size_t k,
                       std::span<const ContentId> initial) {
  if (k == 0) {
    throw ConfigError("cache capacity must be positive");
  }
  if (initial.size() > k) {
    throw ConfigError("initial contents exceed the cache capacity");
  }
  constexpr std::size_t kNever = std::numeric_limits<std::size_t>::max();

  // next_use[t]: next position after t requesting the same content.
  std::vector<std::size_t> next_use(sequence.size(), kNever);
  std::unordered_map<ContentId, std::size_t> upcoming;
  for (std::size_t t = sequence.size(); t-- > 0;) {
    auto it = upcoming.find(sequence[t]);
    next_use[t] = it == upcoming.end() ? kNever : it->second;
    upcoming[sequence[t]] = t;
  }

  // Cached content -> position of its next request.
  std::unordered_map<ContentId, std::size_t> cached;
  for (ContentId id : initial) {
    auto it = upcoming.find(id);
    if (!cached.emplace(id, it == upcoming.end() ? kNever : it->second).second) {
      throw ConfigError("duplicate content in initial cache");
    }
  }

  OfflineSchedule schedule;
  schedule.decisions.reserve(sequence.size());
  for (std::size_t t = 0; t < sequence.size(); ++t) {
    const ContentId request = sequence[t];
    PolicyDecision d{Matching::identity(1), {std::nullopt}};
    auto hit = cached.find(request);
    if (hit != cached.end()) {
      hit->second = next_use[t];
    } else {
      ++schedule.total_faults;
      if (cached.size() >= k) {
        auto victim = cached.begin();
        for (auto it = cached.begin(); it != cached.end(); ++it) {
          if (it->second > victim->second ||
              (it->second == victim->second && it->first > victim->first)) {
            victim = it;
          }
        }
        d.evictions[0] = victim->first;
        cached.erase(victim);
      }
      cached.emplace(request, next_use[t]);
    }
    schedule.decisions.push_back(std::move(d));
  }
  return schedule;
}

}  // namespace mcp
