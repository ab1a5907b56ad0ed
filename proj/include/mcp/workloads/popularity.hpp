#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mcp/core/types.hpp"

namespace mcp {

/// Request probabilities indexed by content, together with the descending
/// popularity ranking derived from them. Equal probabilities rank the
/// smaller content index as more popular.
class CatalogPopularity {
 public:
  CatalogPopularity() = default;
  explicit CatalogPopularity(std::vector<double> probabilities);

  std::size_t size() const { return probabilities_.size(); }
  double probability(ContentId id) const { return probabilities_[catalog_index(id)]; }
  std::span<const double> probabilities() const { return probabilities_; }

  /// 1 = most popular.
  std::size_t rank(ContentId id) const { return rank_[catalog_index(id)]; }
  ContentId at_rank(std::size_t rank) const { return order_[rank - 1]; }
  std::span<const ContentId> order() const { return order_; }

  /// Probabilities re-sorted in descending order (p_1 >= p_2 >= ...).
  std::vector<double> descending() const;

 private:
  std::vector<double> probabilities_;
  std::vector<ContentId> order_;
  std::vector<std::size_t> rank_;
};

}  // namespace mcp
