#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "afdt/circuit.h"

namespace afdt::kernels::detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double unit(std::uint64_t bits) { return double(bits >> 11) * 0x1.0p-53; }

/// Hits in sample block `block` (at most kSampleBlock samples).
inline std::uint64_t sample_block(const Circuit& c, std::span<const double> probs,
                                  std::span<const std::uint8_t> defense, std::uint64_t seed,
                                  std::uint64_t block, std::uint64_t count) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(block)));
  std::vector<std::uint8_t> risk(probs.size());
  std::vector<std::uint8_t> scratch;
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < count; ++s) {
    for (std::size_t i = 0; i < probs.size(); ++i) risk[i] = unit(rng()) < probs[i];
    hits += c.evaluate([&](std::uint32_t i) { return risk[i] != 0; },
                       [&](std::uint32_t i) { return defense[i] != 0; }, scratch);
  }
  return hits;
}

/// P(mask) factorised as low[mask & lo_mask] * high[mask >> lo_bits].
struct WeightTables {
  unsigned lo_bits = 0;
  std::vector<double> low, high;

  explicit WeightTables(std::span<const double> p) {
    const unsigned n = unsigned(p.size());
    lo_bits = n / 2;
    low = table(p.subspan(0, lo_bits));
    high = table(p.subspan(lo_bits));
  }

  double weight(std::uint64_t mask) const {
    return low[mask & ((std::uint64_t{1} << lo_bits) - 1)] * high[mask >> lo_bits];
  }

 private:
  static std::vector<double> table(std::span<const double> p) {
    std::vector<double> t{1.0};
    for (double pi : p) {
      std::vector<double> next(t.size() * 2);
      for (std::size_t m = 0; m < t.size(); ++m) {
        next[m] = t[m] * (1.0 - pi);
        next[m + t.size()] = t[m] * pi;
      }
      t = std::move(next);
    }
    return t;
  }
};

inline double enumerate_chunk(const Circuit& c, const WeightTables& w, std::span<const std::uint8_t> defense,
                              std::uint64_t begin, std::uint64_t end, std::vector<std::uint8_t>& scratch) {
  double sum = 0.0;
  for (std::uint64_t m = begin; m < end; ++m) {
    if (c.evaluate([m](std::uint32_t i) { return (m >> i) & 1U; },
                   [&](std::uint32_t i) { return defense[i] != 0; }, scratch))
      sum += w.weight(m);
  }
  return sum;
}

/// Next mask with the same popcount (Gosper's hack).
inline std::uint64_t next_same_popcount(std::uint64_t v) {
  std::uint64_t t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (__builtin_ctzll(v) + 1));
}

/// All n-bit masks with `k` bits set, ascending.
inline std::vector<std::uint64_t> level_masks(unsigned n, unsigned k) {
  std::vector<std::uint64_t> out;
  if (k == 0) return {0};
  if (k > n) return out;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t v = (std::uint64_t{1} << k) - 1; v < limit; v = next_same_popcount(v)) out.push_back(v);
  return out;
}

inline bool has_kept_subset(std::uint64_t m, const std::vector<std::uint64_t>& kept) {
  for (auto k : kept)
    if ((k & m) == k) return true;
  return false;
}

}  // namespace afdt::kernels::detail
