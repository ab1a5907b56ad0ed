#include "mcp/core/cache_state.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "mcp/core/errors.hpp"

namespace mcp {

CacheState::CacheState(std::size_t capacity) : capacity_(capacity) {
  if (capacity == 0) {
    throw ConfigError("cache capacity must be positive");
  }
}

const CacheEntry& CacheState::entry(ContentId id) const {
  auto it = entries_.find(id);
  if (it == entries_.end()) {
    throw std::out_of_range("content " + std::to_string(id.value) + " not cached");
  }
  return it->second;
}

std::vector<ContentId> CacheState::contents() const {
  std::vector<ContentId> out;
  out.reserve(entries_.size());
  for (const auto& [id, e] : entries_) {
    out.push_back(id);
  }
  return out;
}

void CacheState::insert(ContentId id, std::uint64_t slot) {
  if (full()) {
    throw ProtocolError("insert into a full cache");
  }
  auto [it, fresh] = entries_.try_emplace(id, CacheEntry{slot, next_seq_, slot});
  if (!fresh) {
    throw ProtocolError("content " + std::to_string(id.value) + " already cached");
  }
  ++next_seq_;
}

void CacheState::erase(ContentId id) {
  if (entries_.erase(id) == 0) {
    throw InvalidEvictionError("content " + std::to_string(id.value) + " is not cached");
  }
}

void CacheState::touch(ContentId id, std::uint64_t slot) {
  auto it = entries_.find(id);
  if (it == entries_.end()) {
    throw std::out_of_range("content " + std::to_string(id.value) + " not cached");
  }
  it->second.last_use = slot;
}

std::optional<ContentId> CacheState::oldest_arrival() const {
  std::optional<ContentId> best;
  const CacheEntry* best_entry = nullptr;
  for (const auto& [id, e] : entries_) {
    if (best_entry == nullptr ||
        std::tie(e.arrival, e.arrival_seq) < std::tie(best_entry->arrival, best_entry->arrival_seq)) {
      best = id;
      best_entry = &e;
    }
  }
  return best;
}

std::optional<ContentId> CacheState::least_recently_used() const {
  std::optional<ContentId> best;
  const CacheEntry* best_entry = nullptr;
  for (const auto& [id, e] : entries_) {
    if (best_entry == nullptr ||
        std::tie(e.last_use, e.arrival, e.arrival_seq) <
            std::tie(best_entry->last_use, best_entry->arrival, best_entry->arrival_seq)) {
      best = id;
      best_entry = &e;
    }
  }
  return best;
}

CacheBankState CacheBankState::empty(std::size_t m, std::size_t k) {
  if (m == 0) {
    throw ConfigError("cache count must be positive");
  }
  CacheBankState bank;
  bank.caches.assign(m, CacheState(k));
  return bank;
}

CacheBankState CacheBankState::preloaded(std::span<const std::vector<ContentId>> oldest_first,
                                         std::size_t k) {
  CacheBankState bank = empty(oldest_first.size(), k);
  for (std::size_t j = 0; j < oldest_first.size(); ++j) {
    if (oldest_first[j].size() > k) {
      throw ConfigError("pre-load of cache " + std::to_string(j + 1) + " exceeds capacity");
    }
    for (ContentId id : oldest_first[j]) {
      bank.caches[j].insert(id, 0);
    }
  }
  return bank;
}

std::size_t CacheBankState::distinct_contents() const {
  std::set<ContentId> all;
  for (const auto& cache : caches) {
    for (const auto& [id, e] : cache.entries()) {
      all.insert(id);
    }
  }
  return all.size();
}

}  // namespace mcp
