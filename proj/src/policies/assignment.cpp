#include "mcp/policies/assignment.hpp"

#include <algorithm>
#include <limits>

namespace mcp {

Assignment max_weight_assignment(const WeightMatrix& weights) {
  const std::size_t n = weights.size();
  Assignment out;
  out.column_of_row.assign(n, 0);
  if (n == 0) {
    return out;
  }
  // Shortest augmenting path Hungarian on cost = -weight, 1-based internals.
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0), minv(n + 1);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      std::int64_t delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) {
          continue;
        }
        const std::int64_t cur = -weights(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  for (std::size_t j = 1; j <= n; ++j) {
    out.column_of_row[p[j] - 1] = j - 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    out.weight += weights(i, out.column_of_row[i]);
  }
  return out;
}

namespace {

// Best weight for rows [first_row, n) over the columns not marked taken.
std::int64_t completion_weight(const WeightMatrix& weights, std::size_t first_row,
                               const std::vector<char>& taken) {
  const std::size_t n = weights.size();
  const std::size_t rest = n - first_row;
  if (rest == 0) {
    return 0;
  }
  std::vector<std::size_t> cols;
  cols.reserve(rest);
  for (std::size_t j = 0; j < n; ++j) {
    if (!taken[j]) {
      cols.push_back(j);
    }
  }
  WeightMatrix sub(rest);
  for (std::size_t r = 0; r < rest; ++r) {
    for (std::size_t c = 0; c < rest; ++c) {
      sub(r, c) = weights(first_row + r, cols[c]);
    }
  }
  return max_weight_assignment(sub).weight;
}

}  // namespace

Assignment lexicographic_max_weight_assignment(const WeightMatrix& weights) {
  const std::size_t n = weights.size();
  const std::int64_t best = max_weight_assignment(weights).weight;
  Assignment out;
  out.column_of_row.assign(n, 0);
  std::vector<char> taken(n, 0);
  std::int64_t fixed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (taken[j]) {
        continue;
      }
      taken[j] = 1;
      if (fixed + weights(i, j) + completion_weight(weights, i + 1, taken) == best) {
        out.column_of_row[i] = j;
        fixed += weights(i, j);
        break;
      }
      taken[j] = 0;
    }
  }
  out.weight = fixed;
  return out;
}

}  // namespace mcp
