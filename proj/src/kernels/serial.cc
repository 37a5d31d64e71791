#include "afdt/kernels.h"
#include "detail.h"

namespace afdt::kernels::serial {

std::vector<Family> cut_families(const Circuit& circuit, const std::vector<DefenseVector>& defenses,
                                 std::size_t max_cuts) {
  std::vector<Family> out;
  out.reserve(defenses.size());
  for (const auto& d : defenses) out.push_back(cut_family(circuit, d, max_cuts));
  return out;
}

std::vector<std::uint64_t> minimal_activating_masks(const Circuit& circuit, std::span<const std::uint8_t> defense) {
  const unsigned n = unsigned(circuit.risk_count());
  std::vector<std::uint64_t> kept;
  std::vector<std::uint8_t> scratch;
  for (unsigned k = 0; k <= n; ++k) {
    for (auto m : detail::level_masks(n, k)) {
      if (detail::has_kept_subset(m, kept)) continue;
      if (circuit.evaluate([m](std::uint32_t i) { return (m >> i) & 1U; },
                           [&](std::uint32_t i) { return defense[i] != 0; }, scratch))
        kept.push_back(m);
    }
  }
  return kept;
}

double enumerate_probability(const Circuit& circuit, std::span<const double> probs,
                             std::span<const std::uint8_t> defense) {
  const detail::WeightTables w(probs);
  const std::uint64_t total = std::uint64_t{1} << circuit.risk_count();
  std::vector<std::uint8_t> scratch;
  double sum = 0.0;
  for (std::uint64_t begin = 0; begin < total; begin += kEnumChunk)
    sum += detail::enumerate_chunk(circuit, w, defense, begin, std::min(total, begin + kEnumChunk), scratch);
  return sum;
}

std::uint64_t monte_carlo_hits(const Circuit& circuit, std::span<const double> probs,
                               std::span<const std::uint8_t> defense, std::uint64_t samples, std::uint64_t seed) {
  std::uint64_t hits = 0;
  const std::uint64_t blocks = (samples + kSampleBlock - 1) / kSampleBlock;
  for (std::uint64_t b = 0; b < blocks; ++b)
    hits += detail::sample_block(circuit, probs, defense, seed, b, std::min(kSampleBlock, samples - b * kSampleBlock));
  return hits;
}

}  // namespace afdt::kernels::serial
