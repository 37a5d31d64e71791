#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "afdt/circuit.h"
#include "afdt/leaf_set.h"

namespace afdt {

/// Minimal cut family of the circuit under one defense vector (one byte per
/// BDS leaf). Throws Error(kBudgetExceeded) when an intermediate family grows
/// beyond `max_cuts`.
Family cut_family(const Circuit& circuit, std::span<const std::uint8_t> defense, std::size_t max_cuts);

/// Data-parallel kernels. `serial` is the reference implementation; `omp`
/// distributes the same work with OpenMP and must return identical results
/// (floating-point sums use the same fixed chunking in both).
namespace kernels {

/// Block size of the Monte-Carlo sampler; block b draws from its own stream
/// seeded from (seed, b), so results do not depend on the thread count.
inline constexpr std::uint64_t kSampleBlock = 8192;
/// Masks per partial sum in exact enumeration.
inline constexpr std::uint64_t kEnumChunk = 4096;

using DefenseVector = std::vector<std::uint8_t>;

namespace serial {

/// cut_family for each defense vector.
std::vector<Family> cut_families(const Circuit& circuit, const std::vector<DefenseVector>& defenses,
                                 std::size_t max_cuts);

/// Minimal risk masks (one bit per risk leaf, at most 63 leaves) that trigger
/// the TLE, found by increasing cardinality. Sorted by popcount, then value.
std::vector<std::uint64_t> minimal_activating_masks(const Circuit& circuit, std::span<const std::uint8_t> defense);

/// Σ over all risk masks of P(mask)·[TLE active].
double enumerate_probability(const Circuit& circuit, std::span<const double> probs,
                             std::span<const std::uint8_t> defense);

/// Number of sampled risk vectors that trigger the TLE.
std::uint64_t monte_carlo_hits(const Circuit& circuit, std::span<const double> probs,
                               std::span<const std::uint8_t> defense, std::uint64_t samples, std::uint64_t seed);

}  // namespace serial

namespace omp {

std::vector<Family> cut_families(const Circuit& circuit, const std::vector<DefenseVector>& defenses,
                                 std::size_t max_cuts);
std::vector<std::uint64_t> minimal_activating_masks(const Circuit& circuit, std::span<const std::uint8_t> defense);
double enumerate_probability(const Circuit& circuit, std::span<const double> probs,
                             std::span<const std::uint8_t> defense);
std::uint64_t monte_carlo_hits(const Circuit& circuit, std::span<const double> probs,
                               std::span<const std::uint8_t> defense, std::uint64_t samples, std::uint64_t seed);

}  // namespace omp

/// Number of OpenMP threads available (1 when built without OpenMP).
int max_threads();

}  // namespace kernels
}  // namespace afdt
