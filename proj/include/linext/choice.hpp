#pragma once

#include <cstdint>

namespace linext {

/// Deterministic source for the free choices of the constructions.
///
/// The stream is SplitMix64: the state advances by 0x9E3779B97F4A7C15 and is
/// finalized with the multipliers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB
/// (shifts 30, 27, 31). uniform(n) takes the high 64 bits of next() * n.
/// These constants are part of the cocycle file contract and never change.
class ChoiceSource {
 public:
  explicit ChoiceSource(std::uint64_t seed = 0) noexcept : seed_(seed), state_(seed) {}

  std::uint64_t next() noexcept {
    ++counter_;
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform index in [0, n); n must be positive.
  std::uint32_t uniform(std::uint32_t n) noexcept {
    const std::uint64_t x = next();
    const std::uint64_t low = ((x & 0xFFFFFFFFULL) * n) >> 32;
    return static_cast<std::uint32_t>(((x >> 32) * n + low) >> 32);
  }

  std::uint64_t seed() const noexcept { return seed_; }
  /// Number of draws taken so far.
  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
  std::uint64_t counter_ = 0;
};

}  // namespace linext
