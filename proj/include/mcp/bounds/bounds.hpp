#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>

#include "mcp/workloads/popularity.hpp"

namespace mcp {

/// sum_{i=from}^{n} p_i for a descending pmf, with 1-based `from`. Empty
/// ranges (from > n) sum to 0.
double tail_mass(std::span<const double> descending, std::size_t from);

struct RateBounds {
  double lower = 0.0;  // m * sum_{i=k+1}^{n} p_i
  double upper = 0.0;  // m * sum_{i=k}^{n} p_i
};

/// Per-slot expected CMP faults under i.i.d. requests. Throws ConfigError if
/// k = 0 or k > n.
RateBounds cmp_rate_bounds(const CatalogPopularity& pop, std::size_t m, std::size_t k);

/// Upper bound on the CMP competitive ratio under i.i.d. requests:
///   sum_{i=k}^{n} p_i / sum_{i=mk+1}^{n} p_i.
/// Throws UndefinedBoundError when mk >= n.
double cr_upper_iid(const CatalogPopularity& pop, std::size_t m, std::size_t k);

/// Upper bound on the CMP competitive ratio under correlated arrivals:
///   (1 + m / E[Z(T)]) * sum_{i=k}^{n} p~_i / sum_{i=ceil(m(k+E[L]))+1}^{n} p~_i.
/// `ptilde` must be sorted descending. Throws UndefinedBoundError when the
/// denominator index exceeds n or E[Z(T)] <= 0.
double cr_upper_correlated(std::span<const double> ptilde, double mean_length,
                           double mean_completed, std::size_t m, std::size_t k);

/// 1 + 1 / floor(T / b). Throws UndefinedBoundError when T < b or b = 0.
double corollary_penalty(std::uint64_t horizon, std::uint64_t group_size);

enum class ScalingRegime { cmp, lru };

/// Unnormalised trend references (constants are unknown): m^(beta-1) for
/// CMP and m^(beta-1) * (ln k)^(2 - 2/beta) for LRU. Only defined for
/// beta > 1; throws UndefinedBoundError otherwise.
double scaling_reference(double m, double k, double beta, ScalingRegime regime);

struct BoundParams {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  double beta = 0.0;
  std::optional<std::size_t> group_size;  // b, correlated only
  std::optional<double> gamma;            // correlated only
  std::optional<std::uint64_t> horizon;   // T
};

/// One row of evaluated quantities. Fields that do not apply to the
/// parameter point are left empty.
struct BoundReport {
  BoundParams params;
  double cmp_rate_lower = 0.0;
  double cmp_rate_upper = 0.0;
  std::optional<double> opt_rate_lower;
  std::optional<double> cr_upper;
  std::optional<double> penalty_factor;
  std::optional<double> scaling_reference;
};

/// Zipf(n, beta) point. cr_upper and opt_rate_lower are empty when mk >= n;
/// scaling_reference is the CMP form and empty for beta <= 1.
BoundReport evaluate_iid(std::size_t n, std::size_t m, std::size_t k, double beta,
                         std::optional<std::uint64_t> horizon = std::nullopt);

/// Correlated point from externally estimated p~ (descending), E[L], E[Z(T)].
/// Rates are per subsequence (sum of p~ tails); cr_upper is the correlated
/// bound and penalty_factor the 1 + 1/floor(T/b) factor.
BoundReport evaluate_correlated(const BoundParams& params, std::span<const double> ptilde,
                                double mean_length, double mean_completed);

/// Column order: n,m,k,beta,b,gamma,T,cmp_rate_lower,cmp_rate_upper,
/// opt_rate_lower,cr_upper,penalty_factor,scaling_reference
void write_bound_header(std::ostream& out);
void write_bound_row(std::ostream& out, const BoundReport& report);

}  // namespace mcp
