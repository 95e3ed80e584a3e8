#include "rodt/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace rodt {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("below(0)");
  if ((bound & (bound - 1)) == 0) return next() & (bound - 1);
  std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % bound;
  for (;;) {
    std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t node_id) {
  SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ULL * (node_id + 1)));
  g.next();
  return g.next();
}

bool bernoulli_exact(SplitMix64& gen, const BigInt& num, const BigInt& den) {
  if (den <= 0 || num < 0 || num > den)
    throw std::invalid_argument("bernoulli_exact needs 0 <= num <= den");
  if (num == 0) return false;
  if (num == den) return true;
  std::size_t bits = msb(den) + 1;  // den >= 2 here
  std::size_t blocks = (bits + 63) / 64;
  for (;;) {
    BigInt x = 0;
    for (std::size_t i = 0; i < blocks; ++i) {
      x <<= 64;
      x |= gen.next();
    }
    x >>= blocks * 64 - bits;
    if (x < den) return x < num;
  }
}

std::vector<int> choose_k_of_n(SplitMix64& gen, int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("choose_k_of_n range");
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  for (int i = 0; i < k; ++i) {
    std::uint64_t j = i + gen.below(std::uint64_t(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

void shuffle(SplitMix64& gen, std::vector<int>& items) {
  for (std::size_t i = items.size(); i > 1; --i)
    std::swap(items[i - 1], items[gen.below(i)]);
}

}  // namespace rodt
