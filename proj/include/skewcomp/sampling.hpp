#pragma once

#include <cstdint>

namespace skewcomp {

/// Stateless SplitMix64 draw for (seed, index); splittable by construction,
/// so per-sample derivation is independent of evaluation order.
inline std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(std::uint64_t seed, std::uint64_t index) {
  return static_cast<double>(splitmix64(seed, index) >> 11) * 0x1.0p-53;
}

/// Uniform skew in [-ppm, +ppm] parts per million.
inline double uniform_skew(std::uint64_t seed, std::uint64_t index,
                           double ppm) {
  return (2.0 * uniform01(seed, index) - 1.0) * ppm * 1e-6;
}

}  // namespace skewcomp
