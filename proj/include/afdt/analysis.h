#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "afdt/circuit.h"
#include "afdt/model.h"

namespace afdt {

/// Caps that bound worst-case blowup of the analyses.
struct Limits {
  std::size_t max_cuts = 100000;
  std::size_t max_defense_subsets = 4096;
  std::size_t max_brute_force_leaves = 20;
  std::size_t max_exact_leaves = 24;

  /// Defaults, with max_cuts taken from AFDT_MAX_CUTS when it is set.
  static Limits from_env();
};

/// A set of leaf ids in canonical (lexicographically sorted) order. Used for
/// cut sets (BAS/BCF ids) and defense sets (BDS ids).
using IdSet = std::vector<NodeId>;
using CutSet = IdSet;
using DefenseSet = IdSet;

/// Size-then-lexicographic order on canonical id sets.
bool canonical_less(const IdSet& a, const IdSet& b);
/// Sorts members, then sorts the family canonically and drops duplicates.
void canonicalize(std::vector<IdSet>& family);

/// Minimal cut sets of the model under one defense configuration.
struct McsFamily {
  DefenseSet defense;
  std::vector<CutSet> cuts;

  bool operator==(const McsFamily&) const = default;
};

/// How the defenses act on one cut set of the no-defense family.
struct ImpactEntry {
  CutSet mcs;
  /// Minimal defense sets under which `mcs` alone no longer triggers the TLE.
  std::vector<DefenseSet> neutralizing;
  /// Minimal defense sets under which no superset of `mcs` remains a
  /// minimal cut set.
  std::vector<DefenseSet> eradicating;
  /// For neutralizing sets that only harden the cut: the enlarged cut sets
  /// (strict supersets of `mcs`) that remain.
  std::map<DefenseSet, std::vector<CutSet>> hardened_by;

  bool operator==(const ImpactEntry&) const = default;
};

/// Minimal models of the risk-leaf function f(a) = evaluate(a ∪ defense),
/// computed bottom-up over the circuit with subsumption.
///
/// Throws Error(kUnknownDefense) if `defense` names anything other than a
/// BDS leaf, Error(kBudgetExceeded) if a family exceeds limits.max_cuts.
McsFamily minimal_cut_sets(const Circuit& circuit, const DefenseSet& defense, const Limits& limits = {});
McsFamily minimal_cut_sets(const Model& model, const DefenseSet& defense, const Limits& limits = {});

/// Exhaustive oracle: risk subsets in increasing cardinality, keeping those
/// that trigger the TLE and contain no kept subset. Error(kTooLarge) above
/// limits.max_brute_force_leaves risk leaves.
McsFamily brute_force_mcs(const Circuit& circuit, const DefenseSet& defense, const Limits& limits = {});
McsFamily brute_force_mcs(const Model& model, const DefenseSet& defense, const Limits& limits = {});

/// One family per defense subset, subsets in size-then-lexicographic order.
/// Without an explicit list every subset of the BDS leaves is analysed
/// (Error(kTooManyDefenses) above limits.max_defense_subsets).
std::vector<McsFamily> mcs_table(const Circuit& circuit,
                                 const std::optional<std::vector<DefenseSet>>& subsets = std::nullopt,
                                 const Limits& limits = {});
std::vector<McsFamily> mcs_table(const Model& model,
                                 const std::optional<std::vector<DefenseSet>>& subsets = std::nullopt,
                                 const Limits& limits = {});

/// One entry per no-defense minimal cut set, in canonical order.
std::vector<ImpactEntry> defense_impact(const Circuit& circuit, const Limits& limits = {});
std::vector<ImpactEntry> defense_impact(const Model& model, const Limits& limits = {});

/// All subsets of `defenses` in size-then-lexicographic order.
std::vector<DefenseSet> all_subsets(const std::vector<NodeId>& defenses);

}  // namespace afdt
