#include "mcp/workloads/popularity.hpp"

#include <algorithm>
#include <numeric>

namespace mcp {

CatalogPopularity::CatalogPopularity(std::vector<double> probabilities)
    : probabilities_(std::move(probabilities)) {
  const std::size_t n = probabilities_.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [this](std::size_t a, std::size_t b) {
    return probabilities_[a] > probabilities_[b];
  });
  order_.reserve(n);
  rank_.assign(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    order_.emplace_back(static_cast<std::uint32_t>(idx[r] + 1));
    rank_[idx[r]] = r + 1;
  }
}

std::vector<double> CatalogPopularity::descending() const {
  std::vector<double> out;
  out.reserve(order_.size());
  for (ContentId id : order_) {
    out.push_back(probability(id));
  }
  return out;
}

}  // namespace mcp
