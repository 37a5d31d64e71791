#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "afdt/analysis.h"
#include "afdt/kernels.h"

namespace afdt {

Limits Limits::from_env() {
  Limits limits;
  if (const char* v = std::getenv("AFDT_MAX_CUTS")) {
    char* end = nullptr;
    unsigned long long n = std::strtoull(v, &end, 10);
    if (end != v && *end == '\0' && n > 0) limits.max_cuts = n;
  }
  return limits;
}

bool canonical_less(const IdSet& a, const IdSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void canonicalize(std::vector<IdSet>& family) {
  for (auto& s : family) std::sort(s.begin(), s.end());
  std::sort(family.begin(), family.end(), canonical_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

std::vector<DefenseSet> all_subsets(const std::vector<NodeId>& defenses) {
  std::vector<NodeId> sorted = defenses;
  std::sort(sorted.begin(), sorted.end());
  std::vector<DefenseSet> out;
  const std::size_t n = sorted.size();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    DefenseSet s;
    for (std::size_t i = 0; i < n; ++i)
      if ((m >> i) & 1U) s.push_back(sorted[i]);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

namespace {

kernels::DefenseVector defense_vector(const Circuit& c, const DefenseSet& defense) {
  kernels::DefenseVector v(c.defense_count());
  for (const auto& id : defense) {
    int i = c.defense_index(id);
    if (i < 0) throw Error(ErrorCode::kUnknownDefense, id, "'" + id + "' is not a defense (BDS) leaf");
    v[i] = 1;
  }
  return v;
}

DefenseSet defense_set(const Circuit& c, std::uint64_t mask) {
  DefenseSet s;
  for (std::size_t i = 0; i < c.defense_count(); ++i)
    if ((mask >> i) & 1U) s.push_back(c.defense_ids()[i]);
  return s;
}

CutSet to_ids(const Circuit& c, const LeafSet& s) {
  CutSet out;
  for (std::size_t i = 0; i < c.risk_count(); ++i)
    if (s.test(i)) out.push_back(c.risk_ids()[i]);
  return out;  // risk ids are sorted, so this is canonical
}

McsFamily to_family(const Circuit& c, const Family& f, DefenseSet defense) {
  McsFamily out{std::move(defense), {}};
  out.cuts.reserve(f.size());
  for (const auto& s : f) out.cuts.push_back(to_ids(c, s));
  std::sort(out.cuts.begin(), out.cuts.end(), canonical_less);
  return out;
}

DefenseSet sorted(DefenseSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// Inclusion-minimal masks among those satisfying `pred`.
template <class Pred>
std::vector<std::uint64_t> minimal_masks(std::uint64_t count, Pred pred) {
  std::vector<std::uint64_t> hits;
  for (std::uint64_t m = 0; m < count; ++m)
    if (pred(m)) hits.push_back(m);
  std::stable_sort(hits.begin(), hits.end(),
                   [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::uint64_t> kept;
  for (auto m : hits) {
    bool covered = std::any_of(kept.begin(), kept.end(), [m](auto k) { return (k & m) == k; });
    if (!covered) kept.push_back(m);
  }
  return kept;
}

}  // namespace

McsFamily minimal_cut_sets(const Circuit& circuit, const DefenseSet& defense, const Limits& limits) {
  auto d = sorted(defense);
  auto family = cut_family(circuit, defense_vector(circuit, d), limits.max_cuts);
  return to_family(circuit, family, std::move(d));
}

McsFamily minimal_cut_sets(const Model& model, const DefenseSet& defense, const Limits& limits) {
  return minimal_cut_sets(Circuit::compile(model), defense, limits);
}

McsFamily brute_force_mcs(const Circuit& circuit, const DefenseSet& defense, const Limits& limits) {
  const std::size_t n = circuit.risk_count();
  if (n > limits.max_brute_force_leaves || n > 63)
    throw Error(ErrorCode::kTooLarge, std::to_string(n),
                "brute force supports at most " + std::to_string(limits.max_brute_force_leaves) +
                    " risk leaves, model has " + std::to_string(n));
  auto d = sorted(defense);
  auto masks = kernels::omp::minimal_activating_masks(circuit, defense_vector(circuit, d));
  McsFamily out{std::move(d), {}};
  for (auto m : masks) {
    CutSet cut;
    for (std::size_t i = 0; i < n; ++i)
      if ((m >> i) & 1U) cut.push_back(circuit.risk_ids()[i]);
    out.cuts.push_back(std::move(cut));
  }
  std::sort(out.cuts.begin(), out.cuts.end(), canonical_less);
  return out;
}

McsFamily brute_force_mcs(const Model& model, const DefenseSet& defense, const Limits& limits) {
  return brute_force_mcs(Circuit::compile(model), defense, limits);
}

std::vector<McsFamily> mcs_table(const Circuit& circuit, const std::optional<std::vector<DefenseSet>>& subsets,
                                 const Limits& limits) {
  std::vector<DefenseSet> list;
  if (subsets) {
    for (const auto& s : *subsets) list.push_back(sorted(s));
    std::stable_sort(list.begin(), list.end(), canonical_less);
  } else {
    const std::size_t b = circuit.defense_count();
    if (b >= 63 || (std::uint64_t{1} << b) > limits.max_defense_subsets)
      throw Error(ErrorCode::kTooManyDefenses, std::to_string(b),
                  std::to_string(b) + " defenses give more than " + std::to_string(limits.max_defense_subsets) +
                      " subsets");
    list = all_subsets(circuit.defense_ids());
  }

  std::vector<kernels::DefenseVector> vectors;
  vectors.reserve(list.size());
  for (const auto& s : list) vectors.push_back(defense_vector(circuit, s));
  auto families = kernels::omp::cut_families(circuit, vectors, limits.max_cuts);

  std::vector<McsFamily> out;
  out.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) out.push_back(to_family(circuit, families[i], list[i]));
  return out;
}

std::vector<McsFamily> mcs_table(const Model& model, const std::optional<std::vector<DefenseSet>>& subsets,
                                 const Limits& limits) {
  return mcs_table(Circuit::compile(model), subsets, limits);
}

std::vector<ImpactEntry> defense_impact(const Circuit& circuit, const Limits& limits) {
  const std::size_t b = circuit.defense_count();
  if (b >= 63 || (std::uint64_t{1} << b) > limits.max_defense_subsets)
    throw Error(ErrorCode::kTooManyDefenses, std::to_string(b),
                std::to_string(b) + " defenses give more than " + std::to_string(limits.max_defense_subsets) +
                    " subsets");

  // Families indexed by defense mask (bit i = defense leaf i).
  const std::uint64_t configs = std::uint64_t{1} << b;
  std::vector<kernels::DefenseVector> vectors(configs, kernels::DefenseVector(b));
  for (std::uint64_t m = 0; m < configs; ++m)
    for (std::size_t i = 0; i < b; ++i) vectors[m][i] = (m >> i) & 1U;
  const auto families = kernels::omp::cut_families(circuit, vectors, limits.max_cuts);

  Family baseline = families[0];
  std::sort(baseline.begin(), baseline.end(), [&](const LeafSet& x, const LeafSet& y) {
    return canonical_less(to_ids(circuit, x), to_ids(circuit, y));
  });

  auto to_sets = [&](const std::vector<std::uint64_t>& masks) {
    std::vector<DefenseSet> out;
    for (auto m : masks) out.push_back(defense_set(circuit, m));
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
  };

  std::vector<ImpactEntry> out;
  std::vector<std::uint8_t> scratch;
  for (const LeafSet& cut : baseline) {
    ImpactEntry e;
    e.mcs = to_ids(circuit, cut);

    auto neutralizing = minimal_masks(configs, [&](std::uint64_t m) {
      return !circuit.evaluate([&](std::uint32_t i) { return cut.test(i); },
                               [m](std::uint32_t i) { return (m >> i) & 1U; }, scratch);
    });
    auto eradicating = minimal_masks(configs, [&](std::uint64_t m) {
      const auto& f = families[m];
      return std::none_of(f.begin(), f.end(), [&](const LeafSet& c) { return cut.subset_of(c); });
    });

    for (auto m : neutralizing) {
      std::vector<CutSet> enlarged;
      for (const auto& c : families[m])
        if (cut.subset_of(c)) enlarged.push_back(to_ids(circuit, c));
      if (!enlarged.empty()) {
        std::sort(enlarged.begin(), enlarged.end(), canonical_less);
        e.hardened_by.emplace(defense_set(circuit, m), std::move(enlarged));
      }
    }
    e.neutralizing = to_sets(neutralizing);
    e.eradicating = to_sets(eradicating);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ImpactEntry> defense_impact(const Model& model, const Limits& limits) {
  return defense_impact(Circuit::compile(model), limits);
}

}  // namespace afdt
