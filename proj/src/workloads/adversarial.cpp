#include "mcp/workloads/adversarial.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace mcp::adversarial {

namespace {

constexpr std::array<std::string_view, kCatalog> kNames = {"x1", "x2", "a1", "a2", "a3",
                                                          "a4", "b1", "b2", "b3", "b4"};

// One period of the stream. The 4th and 6th batches are (a3,b3) and (a3,b4).
constexpr std::array<std::pair<ContentId, ContentId>, 6> kCycle = {{
    {a1, a2},
    {b1, b2},
    {a1, a3},
    {a3, b3},
    {a1, a4},
    {a3, b4},
}};

}  // namespace

std::string_view content_name(ContentId id) {
  if (!in_catalog(id, kCatalog)) {
    throw std::out_of_range("content " + std::to_string(id.value) +
                            " is outside the adversarial universe");
  }
  return kNames[catalog_index(id)];
}

std::span<const std::pair<ContentId, ContentId>> cycle() { return kCycle; }

std::vector<RequestBatch> adversarial_stream(std::size_t cycles) {
  std::vector<RequestBatch> out;
  out.reserve(1 + 6 * cycles);
  out.push_back(RequestBatch{1, {a1, b1}});
  for (std::size_t c = 0; c < cycles; ++c) {
    for (const auto& [first, second] : kCycle) {
      out.push_back(RequestBatch{out.size() + 1, {first, second}});
    }
  }
  return out;
}

CacheBankState initial_bank() {
  const std::array<std::vector<ContentId>, 2> oldest_first = {
      std::vector<ContentId>{x1, a4, a3, a2},
      std::vector<ContentId>{x2, b4, b3, b2},
  };
  return CacheBankState::preloaded(oldest_first, kCapacity);
}

void write_stream_csv(std::ostream& out, std::span<const RequestBatch> stream) {
  out << "slot,r1,r2\n";
  for (const RequestBatch& batch : stream) {
    out << batch.slot << ',' << content_name(batch[0]) << ',' << content_name(batch[1]) << '\n';
  }
}

}  // namespace mcp::adversarial
