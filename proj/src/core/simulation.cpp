#include "mcp/core/simulation.hpp"

#include <string>

#include "mcp/core/errors.hpp"
#include "mcp/core/service.hpp"

namespace mcp {

void SimulationTrace::write_csv(std::ostream& out) const {
  out << "slot,cache,request,hit,evicted\n";
  for (const TraceRow& row : rows_) {
    out << row.slot << ',' << row.cache + 1 << ',' << row.request.value << ','
        << (row.hit ? 1 : 0) << ',';
    if (row.evicted) {
      out << row.evicted->value;
    }
    out << '\n';
  }
}

SimulationResult run_simulation(const Policy& policy, const Workload& workload,
                                std::uint64_t slots, std::uint64_t seed,
                                const SimulationOptions& options) {
  const Dimensions dims = policy.dimensions();
  if (slots == 0) {
    throw ConfigError("simulation needs at least one slot");
  }
  if (dims.caches != workload.caches() || dims.catalog != workload.catalog()) {
    throw ConfigError("policy (m=" + std::to_string(dims.caches) + ", n=" +
                      std::to_string(dims.catalog) + ") and workload (m=" +
                      std::to_string(workload.caches()) + ", n=" +
                      std::to_string(workload.catalog()) + ") disagree");
  }
  if (auto len = workload.length(); len && *len < slots) {
    throw ConfigError("workload provides " + std::to_string(*len) + " batches, " +
                      std::to_string(slots) + " requested");
  }

  SimulationResult result{FaultLedger(dims.caches, options.warmup_slots), {},
                          policy.initial_bank()};
  auto source = workload.open(seed);
  CacheBankState bank = std::move(result.final_bank);

  for (std::uint64_t t = 1; t <= slots; ++t) {
    RequestBatch batch = source->next();
    PolicyDecision decision = policy.decide(bank, batch);
    ServiceResult served =
        apply_service(std::move(bank), batch, decision.matching, decision.evictions);
    bank = std::move(served.bank);
    result.ledger.record(served.faults);
    if (options.record_trace) {
      for (std::size_t j = 0; j < served.outcomes.size(); ++j) {
        const CacheOutcome& o = served.outcomes[j];
        result.trace.append(TraceRow{bank.slot_clock, j, o.request, o.hit, o.evicted});
      }
    }
    if (options.observer) {
      options.observer(bank, batch, served.faults);
    }
  }
  result.final_bank = std::move(bank);
  return result;
}

}  // namespace mcp
