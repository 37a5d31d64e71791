#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "afdt/analysis.h"
#include "afdt/circuit.h"

namespace afdt {

/// Occurrence probability for every BAS/BCF leaf. Defenses have none; they
/// are decisions, not random events.
using ProbAssignment = std::map<NodeId, double>;

enum class ProbMethod { kExact, kMonteCarlo };
std::string_view method_name(ProbMethod m);  // "exact", "monte-carlo"

struct ProbResult {
  double value = 0.0;
  ProbMethod method = ProbMethod::kExact;
  // Monte-Carlo only; std_error = sqrt(value·(1−value)/samples).
  std::optional<std::uint64_t> samples;
  std::optional<double> std_error;
  std::optional<std::uint64_t> seed;
};

/// Route used by tle_probability_exact. Both give the same value up to
/// rounding; enumeration is the data-parallel kernel, decomposition is a
/// Shannon expansion over partially assigned circuits that stops as soon as
/// the TLE is decided.
enum class ExactRoute { kEnumeration, kDecomposition };

/// P[TLE] with independent risk leaves and a fixed defense set.
///
/// Errors: kTooLarge above limits.max_exact_leaves risk leaves, kMissingProb
/// for an uncovered BAS/BCF, kBadProb for values outside [0,1], kUnknownLeaf
/// for entries naming anything but a BAS/BCF, kUnknownDefense for bad
/// defense ids.
ProbResult tle_probability_exact(const Circuit& circuit, const ProbAssignment& probs, const DefenseSet& defense,
                                 const Limits& limits = {}, ExactRoute route = ExactRoute::kEnumeration);
ProbResult tle_probability_exact(const Model& model, const ProbAssignment& probs, const DefenseSet& defense,
                                 const Limits& limits = {}, ExactRoute route = ExactRoute::kEnumeration);

/// Seeded Monte-Carlo estimate; a pure function of its arguments.
/// Throws std::invalid_argument when samples is 0.
ProbResult tle_probability_mc(const Circuit& circuit, const ProbAssignment& probs, const DefenseSet& defense,
                              std::uint64_t samples, std::uint64_t seed);
ProbResult tle_probability_mc(const Model& model, const ProbAssignment& probs, const DefenseSet& defense,
                              std::uint64_t samples, std::uint64_t seed);

/// Exact probability for each listed defense subset, in the given order.
std::vector<std::pair<DefenseSet, ProbResult>> defense_probability_sweep(const Circuit& circuit,
                                                                         const ProbAssignment& probs,
                                                                         const std::vector<DefenseSet>& subsets,
                                                                         const Limits& limits = {});
std::vector<std::pair<DefenseSet, ProbResult>> defense_probability_sweep(const Model& model,
                                                                         const ProbAssignment& probs,
                                                                         const std::vector<DefenseSet>& subsets,
                                                                         const Limits& limits = {});

}  // namespace afdt
