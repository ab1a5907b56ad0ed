#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "mcp/core/types.hpp"

namespace mcp {

struct CacheEntry {
  std::uint64_t arrival = 0;      // slot the content was inserted
  std::uint64_t arrival_seq = 0;  // cache-local insertion counter, breaks arrival ties
  std::uint64_t last_use = 0;     // slot of the most recent request served here

  bool operator==(const CacheEntry&) const = default;
};

/// One size-k cache. Contents are kept ordered by id so that iteration, and
/// everything derived from it, is deterministic.
class CacheState {
 public:
  explicit CacheState(std::size_t capacity);

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return entries_.size(); }
  bool full() const { return entries_.size() >= capacity_; }
  bool contains(ContentId id) const { return entries_.contains(id); }

  const std::map<ContentId, CacheEntry>& entries() const { return entries_; }
  const CacheEntry& entry(ContentId id) const;
  std::vector<ContentId> contents() const;

  /// Throws ProtocolError when full or already present.
  void insert(ContentId id, std::uint64_t slot);
  /// Throws InvalidEvictionError when absent.
  void erase(ContentId id);
  void touch(ContentId id, std::uint64_t slot);

  /// Earliest (arrival, arrival_seq); empty cache gives nullopt.
  std::optional<ContentId> oldest_arrival() const;
  /// Smallest last_use, ties to the earlier arrival.
  std::optional<ContentId> least_recently_used() const;

  bool operator==(const CacheState& other) const {
    return capacity_ == other.capacity_ && entries_ == other.entries_;
  }

 private:
  std::size_t capacity_;
  std::uint64_t next_seq_ = 0;
  std::map<ContentId, CacheEntry> entries_;
};

/// The m caches plus the clock of the last served slot (0 before any service).
struct CacheBankState {
  std::vector<CacheState> caches;
  std::uint64_t slot_clock = 0;

  static CacheBankState empty(std::size_t m, std::size_t k);

  /// Pre-loads each cache from a list ordered oldest arrival first. Pre-loaded
  /// contents carry arrival/last_use slot 0.
  static CacheBankState preloaded(std::span<const std::vector<ContentId>> oldest_first,
                                  std::size_t k);

  std::size_t size() const { return caches.size(); }
  CacheState& operator[](std::size_t j) { return caches[j]; }
  const CacheState& operator[](std::size_t j) const { return caches[j]; }

  /// Number of distinct contents stored across the bank.
  std::size_t distinct_contents() const;

  bool operator==(const CacheBankState&) const = default;
};

}  // namespace mcp
