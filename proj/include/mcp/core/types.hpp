#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace mcp {

/// Catalog content, 1-based. Index 1 is the most popular content under the
/// popularity ordering that generated the workload.
struct ContentId {
  std::uint32_t value = 0;

  constexpr ContentId() = default;
  constexpr explicit ContentId(std::uint32_t v) : value(v) {}

  constexpr auto operator<=>(const ContentId&) const = default;
};

/// Zero-based position of the content in a catalog-indexed vector.
constexpr std::size_t catalog_index(ContentId id) { return id.value - 1; }

constexpr bool in_catalog(ContentId id, std::size_t n) {
  return id.value >= 1 && id.value <= n;
}

/// m requests arriving together in one slot; duplicates are allowed.
struct RequestBatch {
  std::uint64_t slot = 0;
  std::vector<ContentId> requests;

  std::size_t size() const { return requests.size(); }
  ContentId operator[](std::size_t i) const { return requests[i]; }

  bool operator==(const RequestBatch&) const = default;
};

/// Shape shared by a policy and the workload that drives it.
struct Dimensions {
  std::size_t caches = 0;    // m
  std::size_t catalog = 0;   // n
  std::size_t capacity = 0;  // k
};

}  // namespace mcp

template <>
struct std::hash<mcp::ContentId> {
  std::size_t operator()(mcp::ContentId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};
