#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace metchar {

// Bit-stable helpers on top of std::mt19937_64. The standard distributions
// (uniform_int_distribution etc.) are implementation-defined, so every draw
// that must reproduce across platforms goes through these instead.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform double in [0, 1) from the top 53 bits.
inline double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n), n >= 1, by rejection sampling.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = (UINT64_MAX / n) * n;
  std::uint64_t r = rng();
  while (r >= limit) r = rng();
  return r % n;
}

// k distinct indices drawn from [0, n) via partial Fisher-Yates.
inline std::vector<std::size_t> sample_distinct(std::mt19937_64& rng,
                                                std::size_t n, std::size_t k) {
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(bounded(rng, n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

}  // namespace metchar
