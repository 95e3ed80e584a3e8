#pragma once

#include "rodt/rational.hpp"

#include <cstdint>
#include <vector>

namespace rodt {

// Deterministic splittable generator (splitmix64 core). One root seed
// reproduces an entire run; per-node streams are derived with derive_seed so
// lazy subtree evaluation does not disturb sibling streams.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by rejection; bound >= 1.
  std::uint64_t below(std::uint64_t bound);
};

// Stable stream id for (seed, node) pairs.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t node_id);

// Exact Bernoulli(num/den) with 0 <= num <= den, den >= 1: draws a uniform
// big integer in [0, den) bit-block by bit-block and compares against num.
// No float bias regardless of magnitude.
bool bernoulli_exact(SplitMix64& gen, const BigInt& num, const BigInt& den);

// Uniform k-subset of {0,...,n-1} via partial Fisher-Yates; sorted result.
std::vector<int> choose_k_of_n(SplitMix64& gen, int n, int k);

// In-place Fisher-Yates shuffle.
void shuffle(SplitMix64& gen, std::vector<int>& items);

}  // namespace rodt
