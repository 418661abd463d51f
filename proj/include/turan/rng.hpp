#pragma once

// Deterministic randomness used across the library. The scheme is part of the
// public contract: std::mt19937_64 seeded directly with the caller's seed,
// bounded draws by rejection sampling (no uniform_int_distribution, whose
// algorithm varies between standard libraries), subsets by partial
// Fisher-Yates shuffle. Identical seeds give identical results everywhere.

#include <cstdint>
#include <random>
#include <vector>

namespace turan {

/// Mixes a seed into an independent stream id (the SplitMix64 finalizer).
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Unbiased draw from [0, bound) by rejection; bound must be positive.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

/// First m entries of a uniform permutation of 0..count-1 (partial
/// Fisher-Yates, ascending positions).
inline std::vector<std::uint64_t> sample_prefix(std::uint64_t count,
                                                std::uint64_t m,
                                                std::mt19937_64& rng) {
  std::vector<std::uint64_t> items(count);
  for (std::uint64_t i = 0; i < count; ++i) items[i] = i;
  for (std::uint64_t i = 0; i < m; ++i) {
    std::uint64_t j = i + bounded(rng, count - i);
    std::swap(items[i], items[j]);
  }
  items.resize(m);
  return items;
}

}  // namespace turan
