#pragma once

#include <cstdint>

namespace brillouin {

// splitmix64: tiny, seedable, equidistributed enough for Monte Carlo sampling.
// Same seed gives the same stream on every platform.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit constexpr SplitMix64(std::uint64_t seed) : state(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53 mantissa bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }
};

// Derive an independent substream deterministically. Merging per-block results
// in block order keeps parallel reductions independent of the worker count.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 s(seed);
  std::uint64_t a = s.next();
  SplitMix64 t(stream ^ 0xD1B54A32D192ED03ull);
  return SplitMix64(a ^ t.next());
}

}  // namespace brillouin
