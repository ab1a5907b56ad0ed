#include "mcp/offline/offline.hpp"

#include <iostream>
#include <string>

#include "mcp/core/errors.hpp"
#include "mcp/core/numeric.hpp"
#include "mcp/core/service.hpp"

namespace mcp {

std::uint64_t replay_schedule(CacheBankState initial, std::span<const RequestBatch> batches,
                              const OfflineSchedule& schedule) {
  if (schedule.decisions.size() != batches.size()) {
    throw ScheduleMismatchError("schedule has " + std::to_string(schedule.decisions.size()) +
                                " decisions for " + std::to_string(batches.size()) + " batches");
  }
  std::uint64_t faults = 0;
  CacheBankState bank = std::move(initial);
  for (std::size_t t = 0; t < batches.size(); ++t) {
    const PolicyDecision& d = schedule.decisions[t];
    ServiceResult r = apply_service(std::move(bank), batches[t], d.matching, d.evictions);
    faults += r.faults;
    bank = std::move(r.bank);
  }
  return faults;
}

void write_schedule_csv(std::ostream& out, const OfflineSchedule& schedule) {
  out << "slot,request_pos,cache,evicted\n";
  for (std::size_t t = 0; t < schedule.decisions.size(); ++t) {
    const PolicyDecision& d = schedule.decisions[t];
    for (std::size_t i = 0; i < d.matching.size(); ++i) {
      const std::size_t j = d.matching.cache_for(i);
      out << t + 1 << ',' << i + 1 << ',' << j + 1 << ',';
      if (d.evictions[j]) {
        out << d.evictions[j]->value;
      }
      out << '\n';
    }
  }
}

double opt_bound_faults(const CatalogPopularity& pop, std::size_t m, std::size_t k,
                        std::uint64_t slots) {
  const std::size_t n = pop.size();
  const std::size_t stored = m * k;
  if (stored >= n) {
    std::clog << "warning: mk = " << stored << " >= n = " << n
              << "; the offline lower bound degenerates to 0\n";
    return 0.0;
  }
  const std::vector<double> p = pop.descending();
  CompensatedSum tail;
  for (std::size_t i = n; i-- > stored;) {
    tail += p[i];
  }
  return static_cast<double>(slots) * static_cast<double>(m) * tail.value();
}

}  // namespace mcp
