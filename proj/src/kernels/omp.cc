#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "afdt/kernels.h"
#include "detail.h"

namespace afdt::kernels {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace omp {

std::vector<Family> cut_families(const Circuit& circuit, const std::vector<DefenseVector>& defenses,
                                 std::size_t max_cuts) {
  std::vector<Family> out(defenses.size());
  // Exceptions must not escape the parallel region; the lowest failing index
  // is rethrown so the error matches the serial kernel.
  std::vector<std::exception_ptr> errors(defenses.size());
  const auto n = std::int64_t(defenses.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      out[i] = cut_family(circuit, defenses[i], max_cuts);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<std::uint64_t> minimal_activating_masks(const Circuit& circuit, std::span<const std::uint8_t> defense) {
  const unsigned n = unsigned(circuit.risk_count());
  std::vector<std::uint64_t> kept;
  for (unsigned k = 0; k <= n; ++k) {
    // Masks of one cardinality cannot subsume each other, so a level is
    // checked in parallel against the cuts kept from smaller levels.
    const auto level = detail::level_masks(n, k);
    std::vector<std::uint8_t> hit(level.size());
    const auto size = std::int64_t(level.size());
#pragma omp parallel
    {
      std::vector<std::uint8_t> scratch;
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < size; ++i) {
        const std::uint64_t m = level[i];
        hit[i] = !detail::has_kept_subset(m, kept) &&
                 circuit.evaluate([m](std::uint32_t j) { return (m >> j) & 1U; },
                                  [&](std::uint32_t j) { return defense[j] != 0; }, scratch);
      }
    }
    for (std::size_t i = 0; i < level.size(); ++i)
      if (hit[i]) kept.push_back(level[i]);
  }
  return kept;
}

double enumerate_probability(const Circuit& circuit, std::span<const double> probs,
                             std::span<const std::uint8_t> defense) {
  const detail::WeightTables w(probs);
  const std::uint64_t total = std::uint64_t{1} << circuit.risk_count();
  const auto chunks = std::int64_t((total + kEnumChunk - 1) / kEnumChunk);
  std::vector<double> partial(chunks);
#pragma omp parallel
  {
    std::vector<std::uint8_t> scratch;
#pragma omp for schedule(static)
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = std::uint64_t(c) * kEnumChunk;
      partial[c] = detail::enumerate_chunk(circuit, w, defense, begin, std::min(total, begin + kEnumChunk), scratch);
    }
  }
  double sum = 0.0;
  for (double p : partial) sum += p;
  return sum;
}

std::uint64_t monte_carlo_hits(const Circuit& circuit, std::span<const double> probs,
                               std::span<const std::uint8_t> defense, std::uint64_t samples, std::uint64_t seed) {
  const auto blocks = std::int64_t((samples + kSampleBlock - 1) / kSampleBlock);
  std::uint64_t hits = 0;
#pragma omp parallel for reduction(+ : hits) schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::uint64_t first = std::uint64_t(b) * kSampleBlock;
    hits += detail::sample_block(circuit, probs, defense, seed, std::uint64_t(b),
                                 std::min(kSampleBlock, samples - first));
  }
  return hits;
}

}  // namespace omp
}  // namespace afdt::kernels
