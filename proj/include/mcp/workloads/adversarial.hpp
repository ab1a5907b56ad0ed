#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "mcp/core/cache_state.hpp"
#include "mcp/core/types.hpp"

namespace mcp::adversarial {

// Ten-content universe {x1, x2, a1..a4, b1..b4} on two caches of size four.
inline constexpr std::size_t kCatalog = 10;
inline constexpr std::size_t kCaches = 2;
inline constexpr std::size_t kCapacity = 4;

inline constexpr ContentId x1{1}, x2{2};
inline constexpr ContentId a1{3}, a2{4}, a3{5}, a4{6};
inline constexpr ContentId b1{7}, b2{8}, b3{9}, b4{10};

/// "x1", "a3", ...; throws std::out_of_range outside the universe.
std::string_view content_name(ContentId id);

/// The repeating six-batch cycle.
std::span<const std::pair<ContentId, ContentId>> cycle();

/// Prefix (a1, b1) followed by `cycles` copies of the cycle. Slots are 1-based.
std::vector<RequestBatch> adversarial_stream(std::size_t cycles);

/// c1 = {x1, a2, a3, a4}, c2 = {x2, b2, b3, b4}; arrival order x oldest,
/// then a4/b4, a3/b3, a2/b2.
CacheBankState initial_bank();

/// Columns: slot,r1,r2 with content names.
void write_stream_csv(std::ostream& out, std::span<const RequestBatch> stream);

}  // namespace mcp::adversarial
