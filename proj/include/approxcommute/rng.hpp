#pragma once

#include <cstdint>
#include <initializer_list>

namespace approxcommute {

/// Finalizer of SplitMix64 (Steele, Lea & Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// SplitMix64 generator. The state advances by the golden-ratio gamma
/// 0x9e3779b97f4a7c15 and each output is mix64(state). Child streams are
/// derived with `split`, so a (seed, path) pair names one reproducible stream
/// independent of evaluation order or thread count.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  constexpr explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ += kGamma;
    return mix64(state_);
  }

  /// Uniform integer in [0, bound) by rejection; bound must be positive.
  constexpr std::uint64_t uniform(std::uint64_t bound) noexcept {
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
    std::uint64_t r = next();
    while (r >= limit) r = next();
    return r % bound;
  }

  /// True with probability num/den exactly (0 <= num <= den, den > 0).
  constexpr bool bernoulli(std::uint64_t num, std::uint64_t den) noexcept {
    return uniform(den) < num;
  }

  constexpr SplitMix64 split(std::uint64_t key) const noexcept {
    return SplitMix64(mix64(state_ ^ mix64(key + kGamma)));
  }

  constexpr std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

/// Stream addressed by a seed and a path of keys, e.g. {statement, instance}.
constexpr SplitMix64 stream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) noexcept {
  SplitMix64 s(mix64(seed));
  for (std::uint64_t key : path) s = s.split(key);
  return s;
}

}  // namespace approxcommute
