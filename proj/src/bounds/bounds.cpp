#include "mcp/bounds/bounds.hpp"

#include <cmath>
#include <string>

#include "mcp/core/errors.hpp"
#include "mcp/core/numeric.hpp"
#include "mcp/core/format.hpp"
#include "mcp/workloads/zipf.hpp"

namespace mcp {

double tail_mass(std::span<const double> descending, std::size_t from) {
  if (from == 0) {
    from = 1;
  }
  CompensatedSum sum;
  for (std::size_t i = descending.size(); i >= from && i > 0; --i) {
    sum += descending[i - 1];
  }
  return sum.value();
}

RateBounds cmp_rate_bounds(const CatalogPopularity& pop, std::size_t m, std::size_t k) {
  if (k == 0 || k > pop.size()) {
    throw ConfigError("CMP rate bounds need 1 <= k <= n");
  }
  const std::vector<double> p = pop.descending();
  const auto mm = static_cast<double>(m);
  return RateBounds{mm * tail_mass(p, k + 1), mm * tail_mass(p, k)};
}

double cr_upper_iid(const CatalogPopularity& pop, std::size_t m, std::size_t k) {
  if (m * k >= pop.size()) {
    throw UndefinedBoundError("i.i.d. ratio bound needs mk < n (mk=" + std::to_string(m * k) +
                              ", n=" + std::to_string(pop.size()) + ")");
  }
  const std::vector<double> p = pop.descending();
  return tail_mass(p, k) / tail_mass(p, m * k + 1);
}

double cr_upper_correlated(std::span<const double> ptilde, double mean_length,
                           double mean_completed, std::size_t m, std::size_t k) {
  if (!(mean_completed > 0.0)) {
    throw UndefinedBoundError("E[Z(T)] must be positive");
  }
  // Rounded up so that the denominator stays a valid lower bound.
  const double reach = std::ceil(static_cast<double>(m) * (static_cast<double>(k) + mean_length));
  const auto first = static_cast<std::size_t>(reach) + 1;
  if (first > ptilde.size()) {
    throw UndefinedBoundError("m(k + E[L]) + 1 = " + std::to_string(first) + " exceeds n = " +
                              std::to_string(ptilde.size()));
  }
  const double penalty = 1.0 + static_cast<double>(m) / mean_completed;
  return penalty * tail_mass(ptilde, k) / tail_mass(ptilde, first);
}

double corollary_penalty(std::uint64_t horizon, std::uint64_t group_size) {
  if (group_size == 0 || horizon < group_size) {
    throw UndefinedBoundError("penalty factor needs T >= b >= 1");
  }
  return 1.0 + 1.0 / static_cast<double>(horizon / group_size);
}

double scaling_reference(double m, double k, double beta, ScalingRegime regime) {
  if (!(beta > 1.0)) {
    throw UndefinedBoundError("scaling references are defined for beta > 1 only");
  }
  const double cmp = std::pow(m, beta - 1.0);
  if (regime == ScalingRegime::cmp) {
    return cmp;
  }
  return cmp * std::pow(std::log(k), 2.0 - 2.0 / beta);
}

BoundReport evaluate_iid(std::size_t n, std::size_t m, std::size_t k, double beta,
                         std::optional<std::uint64_t> horizon) {
  const CatalogPopularity pop = zipf_pmf(n, beta).catalog();
  BoundReport report;
  report.params = BoundParams{n, m, k, beta, std::nullopt, std::nullopt, horizon};
  const RateBounds rates = cmp_rate_bounds(pop, m, k);
  report.cmp_rate_lower = rates.lower;
  report.cmp_rate_upper = rates.upper;
  if (m * k < n) {
    const std::vector<double> p = pop.descending();
    report.opt_rate_lower = static_cast<double>(m) * tail_mass(p, m * k + 1);
    report.cr_upper = cr_upper_iid(pop, m, k);
  }
  if (beta > 1.0) {
    report.scaling_reference = scaling_reference(static_cast<double>(m), static_cast<double>(k),
                                                 beta, ScalingRegime::cmp);
  }
  return report;
}

BoundReport evaluate_correlated(const BoundParams& params, std::span<const double> ptilde,
                                double mean_length, double mean_completed) {
  BoundReport report;
  report.params = params;
  report.cmp_rate_lower = tail_mass(ptilde, params.k + 1);
  report.cmp_rate_upper = tail_mass(ptilde, params.k);
  const double reach =
      std::ceil(static_cast<double>(params.m) * (static_cast<double>(params.k) + mean_length));
  const auto first = static_cast<std::size_t>(reach) + 1;
  if (first <= ptilde.size()) {
    report.opt_rate_lower = tail_mass(ptilde, first);
    report.cr_upper = cr_upper_correlated(ptilde, mean_length, mean_completed, params.m, params.k);
  }
  if (params.horizon && params.group_size && *params.horizon >= *params.group_size) {
    report.penalty_factor = corollary_penalty(*params.horizon, *params.group_size);
  }
  if (params.beta > 1.0) {
    report.scaling_reference =
        scaling_reference(static_cast<double>(params.m), static_cast<double>(params.k),
                          params.beta, ScalingRegime::cmp);
  }
  return report;
}

void write_bound_header(std::ostream& out) {
  out << "n,m,k,beta,b,gamma,T,cmp_rate_lower,cmp_rate_upper,opt_rate_lower,cr_upper,"
         "penalty_factor,scaling_reference\n";
}

void write_bound_row(std::ostream& out, const BoundReport& r) {
  const BoundParams& p = r.params;
  out << p.n << ',' << p.m << ',' << p.k << ',' << format_real(p.beta) << ','
      << format_optional(p.group_size) << ',' << format_optional(p.gamma) << ','
      << format_optional(p.horizon) << ',' << format_real(r.cmp_rate_lower) << ','
      << format_real(r.cmp_rate_upper) << ',' << format_optional(r.opt_rate_lower) << ','
      << format_optional(r.cr_upper) << ',' << format_optional(r.penalty_factor) << ','
      << format_optional(r.scaling_reference) << '\n';
}

}  // namespace mcp
