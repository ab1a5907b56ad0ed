#pragma once

#include <cstdint>
#include <limits>

namespace mcp {

/// Counter-based generator keyed by (seed, stream, substream). Each key gives
/// an independent SplitMix64 sequence, so any stream can be regenerated on
/// its own without advancing the others.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream = 0)
      : state_(mix(mix(mix(seed) ^ (stream + kStreamSalt)) ^ (substream + kSubstreamSalt))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    state_ += kGolden;
    return mix(state_);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform on {0, ..., bound - 1}; bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound) {
    __extension__ using u128 = unsigned __int128;
    // Lemire's multiply-shift with rejection.
    u128 product = static_cast<u128>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        product = static_cast<u128>((*this)()) * bound;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
  static constexpr std::uint64_t kStreamSalt = 0x632BE59BD9B4E019ULL;
  static constexpr std::uint64_t kSubstreamSalt = 0x85157AF5ULL;

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace mcp
