#include "mcp/offline/offline.hpp"

#include <stdexcept>
#include <string>

#include "mcp/core/errors.hpp"
#include "mcp/workloads/adversarial.hpp"

namespace mcp {

OfflineSchedule adversarial_offline_schedule(std::size_t cycles) {
  using namespace adversarial;
  const std::vector<RequestBatch> stream = adversarial_stream(cycles);

  OfflineSchedule schedule;
  schedule.decisions.reserve(stream.size());
  // a1 -> cache 2 evicting x2, b1 -> cache 1 evicting x1.
  schedule.decisions.push_back(PolicyDecision{Matching({1, 0}), {x1, x2}});
  schedule.total_faults = 2;

  // Offline contents after the prefix; later batches always split across them.
  const CacheBankState opt_bank = CacheBankState::preloaded(
      std::vector<std::vector<ContentId>>{{b1, a2, a3, a4}, {a1, b2, b3, b4}}, kCapacity);
  const CacheState& c1 = opt_bank[0];

  for (std::size_t t = 1; t < stream.size(); ++t) {
    const RequestBatch& batch = stream[t];
    const bool first_in_c1 = c1.contains(batch[0]);
    const bool second_in_c1 = c1.contains(batch[1]);
    if (first_in_c1 == second_in_c1) {
      throw std::logic_error("adversarial batch " + std::to_string(t + 1) +
                             " cannot be split across the offline caches");
    }
    Matching matching = first_in_c1 ? Matching({0, 1}) : Matching({1, 0});
    schedule.decisions.push_back(PolicyDecision{std::move(matching), {std::nullopt, std::nullopt}});
  }
  return schedule;
}

OfflineSchedule adversarial_offline_schedule(std::span<const RequestBatch> batches) {
  if (batches.empty() || (batches.size() - 1) % 6 != 0) {
    throw ScheduleMismatchError("sequence length " + std::to_string(batches.size()) +
                                " is not 1 + 6 * cycles");
  }
  const std::size_t cycles = (batches.size() - 1) / 6;
  const std::vector<RequestBatch> expected = adversarial::adversarial_stream(cycles);
  for (std::size_t t = 0; t < batches.size(); ++t) {
    if (batches[t].requests != expected[t].requests) {
      throw ScheduleMismatchError("batch " + std::to_string(t + 1) +
                                  " differs from the adversarial stream");
    }
  }
  return adversarial_offline_schedule(cycles);
}

}  // namespace mcp
