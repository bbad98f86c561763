#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace finc {

// splitmix64; used to derive independent per-trial seeds from a master seed
// so trial results do not depend on execution order.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// `count` distinct values from [0, universe), sorted.
inline std::vector<std::uint64_t> sample_distinct(std::mt19937_64& rng,
                                                  std::uint64_t universe,
                                                  std::uint64_t count) {
  std::vector<std::uint64_t> pool(universe);
  for (std::uint64_t i = 0; i < universe; ++i) pool[i] = i;
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::uint64_t> d(i, universe - 1);
    std::swap(pool[i], pool[d(rng)]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

/// Log-uniform size in [1, max]: covers sparse and dense regimes evenly.
inline std::uint64_t log_uniform_size(std::mt19937_64& rng, std::uint64_t max) {
  if (max <= 1) return 1;
  std::uniform_real_distribution<double> d(0.0, std::log(static_cast<double>(max)));
  auto s = static_cast<std::uint64_t>(std::exp(d(rng)));
  return std::min(std::max<std::uint64_t>(s, 1), max);
}

}  // namespace finc
