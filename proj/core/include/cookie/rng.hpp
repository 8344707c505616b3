#pragma once

#include <bit>
#include <cstdint>

namespace cookie {

inline constexpr std::uint64_t kDefaultSeed = 0xC00C1E;

/// SplitMix64 finaliser (Stafford variant 13).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Counter-based SplitMix64 stream: the n-th output is mix64(key + n * gamma).
///
/// Streams are addressed by (seed, index) through for_stream(), so replicate
/// r of an experiment draws the same numbers regardless of how replicates are
/// scheduled across threads.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit constexpr SplitMix64(std::uint64_t key) noexcept : key_(key) {}

  static constexpr SplitMix64 for_stream(std::uint64_t seed, std::uint64_t index) noexcept {
    return SplitMix64(mix64(seed ^ mix64(index + kGamma)));
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  constexpr result_type operator()() noexcept {
    counter_ += kGamma;
    return mix64(key_ + counter_);
  }

  /// Uniform double in [0, 1) from the top 53 bits of one draw.
  constexpr double uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  /// Right step iff uniform() < p.
  constexpr bool bernoulli(double p) noexcept { return uniform() < p; }

  /// Number of failures before `successes` successes of a fair coin, drawn
  /// from a stream of raw bits (1 = success). Exactly NegBinomial(r, 1/2).
  std::uint64_t fair_failures_before(std::uint64_t successes) noexcept {
    std::uint64_t failures = 0;
    while (successes > 0) {
      std::uint64_t word = (*this)();
      const auto ones = static_cast<std::uint64_t>(std::popcount(word));
      if (ones < successes) {
        failures += 64 - ones;
        successes -= ones;
        continue;
      }
      // The r-th set bit (from the low end) ends the sequence.
      for (std::uint64_t seen = 0;; ) {
        const int tz = std::countr_zero(word);
        failures += static_cast<std::uint64_t>(tz);
        word >>= tz;
        word >>= 1;
        if (++seen == successes) break;
      }
      successes = 0;
    }
    return failures;
  }

  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace cookie
