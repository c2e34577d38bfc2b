#pragma once

// Seeded streams with output that does not depend on the standard library's
// distribution implementations.

#include <cstdint>
#include <random>

namespace optcode::rng {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of the stream that serves block `block` of a run seeded with `seed`.
constexpr std::uint64_t block_seed(std::uint64_t seed, std::uint64_t block) noexcept {
  return splitmix64(splitmix64(seed) ^ splitmix64(block + 0x5851f42d4c957f2dULL));
}

using Engine = std::mt19937_64;

// Uniform on [0, 1) with 53 random bits.
inline double uniform01(Engine& eng) { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }

// Uniform on (0, 1].
inline double uniform_open_closed(Engine& eng) {
  return static_cast<double>((eng() >> 11) + 1) * 0x1.0p-53;
}

// Uniform integer in [0, n), unbiased by rejection.
inline std::uint64_t uniform_index(Engine& eng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = eng();
  } while (x >= limit);
  return x % n;
}

}  // namespace optcode::rng
