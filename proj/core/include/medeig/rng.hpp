#pragma once

#include <cstdint>

namespace medeig {

/// SplitMix64 (Steele/Lea/Vigna). The generator and the rejection sampler are
/// pinned to these exact constants so that every corpus is reproducible
/// bit-for-bit across platforms; std::random distributions are deliberately
/// avoided for that reason.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Unbiased draw from {0, ..., bound-1} by rejection.
  constexpr std::uint64_t uniform_below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Stateless finalizer, exposed for seed derivation.
  static constexpr std::uint64_t mix(std::uint64_t x) noexcept {
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  /// Derives the seed of an independent stream (per-trial seeds in sweeps).
  static constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) noexcept {
    return mix(seed + 0x9e3779b97f4a7c15ULL * (stream + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace medeig
