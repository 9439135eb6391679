#pragma once

#include <cstdint>
#include <limits>

namespace ramsey_forge {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

// SplitMix64 output function.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Counter-based generator: the value at (seed, counter) does not depend on
// which other counters were evaluated, or in which order.
constexpr std::uint64_t counter_hash(std::uint64_t seed,
                                     std::uint64_t counter) noexcept {
  return mix64(mix64(seed) + 0x9E3779B97F4A7C15ULL * (counter + 1));
}

// Sequential SplitMix64 stream, usable as a UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) noexcept
      : state_(mix64(seed)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  constexpr result_type operator()() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  // Uniform integer in [0, bound), bound > 0. Rejection sampling so the
  // result is identical on every standard library.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t x = (*this)();
    while (x >= limit) x = (*this)();
    return x % bound;
  }

  // Uniform double in [0, 1) with 53 random bits.
  constexpr double uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

}  // namespace ramsey_forge
