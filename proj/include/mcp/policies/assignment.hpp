#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mcp {

/// Dense square weight matrix, row-major: rows are requests, columns caches.
class WeightMatrix {
 public:
  explicit WeightMatrix(std::size_t size) : size_(size), w_(size * size, 0) {}

  std::size_t size() const { return size_; }
  std::int64_t& operator()(std::size_t row, std::size_t col) { return w_[row * size_ + col]; }
  std::int64_t operator()(std::size_t row, std::size_t col) const { return w_[row * size_ + col]; }

 private:
  std::size_t size_;
  std::vector<std::int64_t> w_;
};

struct Assignment {
  std::vector<std::size_t> column_of_row;
  std::int64_t weight = 0;
};

/// Maximum-weight perfect assignment (Hungarian method, O(m^3)).
Assignment max_weight_assignment(const WeightMatrix& weights);

/// Among all maximum-weight assignments, the one whose column_of_row vector
/// is lexicographically smallest.
Assignment lexicographic_max_weight_assignment(const WeightMatrix& weights);

}  // namespace mcp
