#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "thhcheck/error.hpp"

namespace thhcheck {

// Rejects a sweep bound above `limit`, naming the largest accepted value.
inline void require_bound(const std::string& name, int value, int limit) {
  if (value < 0) throw std::invalid_argument(name + " must be non-negative");
  if (value > limit) {
    throw BoundError(
        name + " = " + std::to_string(value) + " is too large to enumerate (maximum " + std::to_string(limit) + ")",
        limit);
  }
}

// splitmix64 finalizer: an independent stream per (seed, instance), so
// sampled sweeps do not depend on iteration order.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Small counter-based generator for per-instance draws; seeding it costs
// nothing, unlike mt19937_64.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

}  // namespace thhcheck
