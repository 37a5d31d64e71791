#include "afdt/quant.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "afdt/kernels.h"

namespace afdt {

std::string_view method_name(ProbMethod m) { return m == ProbMethod::kExact ? "exact" : "monte-carlo"; }

namespace {

std::vector<double> leaf_probs(const Circuit& c, const ProbAssignment& probs) {
  std::vector<double> out(c.risk_count());
  for (const auto& [id, p] : probs) {
    if (c.risk_index(id) < 0)
      throw Error(ErrorCode::kUnknownLeaf, id, "'" + id + "' is not an attack or fault leaf");
    if (!(p >= 0.0 && p <= 1.0))
      throw Error(ErrorCode::kBadProb, id, "probability of '" + id + "' is outside [0,1]");
  }
  for (std::size_t i = 0; i < c.risk_count(); ++i) {
    auto it = probs.find(c.risk_ids()[i]);
    if (it == probs.end())
      throw Error(ErrorCode::kMissingProb, c.risk_ids()[i], "no probability for '" + c.risk_ids()[i] + "'");
    out[i] = it->second;
  }
  return out;
}

std::vector<std::uint8_t> defense_bytes(const Circuit& c, const DefenseSet& defense) {
  std::vector<std::uint8_t> v(c.defense_count());
  for (const auto& id : defense) {
    int i = c.defense_index(id);
    if (i < 0) throw Error(ErrorCode::kUnknownDefense, id, "'" + id + "' is not a defense (BDS) leaf");
    v[i] = 1;
  }
  return v;
}

// Shannon expansion over a three-valued circuit evaluation. Leaves are
// branched in the order the circuit first reaches them, which keeps related
// leaves adjacent and lets most branches be decided early.
class Decomposition {
 public:
  static constexpr std::uint8_t kFalse = 0, kTrue = 1, kUnknown = 2;

  Decomposition(const Circuit& c, std::span<const double> p, std::span<const std::uint8_t> defense)
      : c_(c), p_(p), defense_(defense), state_(c.risk_count(), kUnknown), value_(c.size()) {
    std::vector<std::uint8_t> seen(c.risk_count());
    for (const auto& g : c.gates())
      if (g.op == Circuit::Op::kRisk && !seen[g.leaf]) {
        seen[g.leaf] = 1;
        order_.push_back(g.leaf);
      }
  }

  double run() { return expand(0); }

 private:
  double expand(std::size_t depth) {
    const std::uint8_t v = eval();
    if (v != kUnknown) return v;
    const std::uint32_t leaf = order_[depth];
    state_[leaf] = kTrue;
    const double hi = expand(depth + 1);
    state_[leaf] = kFalse;
    const double lo = expand(depth + 1);
    state_[leaf] = kUnknown;
    return p_[leaf] * hi + (1.0 - p_[leaf]) * lo;
  }

  std::uint8_t eval() {
    const auto& gates = c_.gates();
    for (std::size_t g = 0; g < gates.size(); ++g) {
      const auto& gate = gates[g];
      const std::uint32_t* in = c_.operands().data() + gate.first;
      std::uint8_t out = kFalse;
      switch (gate.op) {
        case Circuit::Op::kRisk: out = state_[gate.leaf]; break;
        case Circuit::Op::kDefense: out = defense_[gate.leaf] ? kTrue : kFalse; break;
        case Circuit::Op::kAnd:
        case Circuit::Op::kOr:
        case Circuit::Op::kVot: {
          std::uint32_t ones = 0, unknown = 0;
          for (std::uint32_t i = 0; i < gate.count; ++i) {
            ones += value_[in[i]] == kTrue;
            unknown += value_[in[i]] == kUnknown;
          }
          const std::uint32_t need =
              gate.op == Circuit::Op::kAnd ? gate.count : gate.op == Circuit::Op::kOr ? 1 : gate.k;
          out = ones >= need ? kTrue : ones + unknown < need ? kFalse : kUnknown;
          break;
        }
        case Circuit::Op::kInh: {
          // Defense slots hold only BDS leaves, so they are always decided.
          const std::uint8_t dis = gate.disabler >= 0 ? value_[gate.disabler] : kFalse;
          const std::uint8_t ev = value_[gate.event];
          if (!value_[gate.defense] || dis == kTrue)
            out = ev;
          else if (dis == kFalse || ev == kFalse)
            out = kFalse;
          else
            out = kUnknown;
          break;
        }
      }
      value_[g] = out;
    }
    return value_.back();
  }

  const Circuit& c_;
  std::span<const double> p_;
  std::span<const std::uint8_t> defense_;
  std::vector<std::uint8_t> state_;
  std::vector<std::uint8_t> value_;
  std::vector<std::uint32_t> order_;
};

}  // namespace

ProbResult tle_probability_exact(const Circuit& circuit, const ProbAssignment& probs, const DefenseSet& defense,
                                 const Limits& limits, ExactRoute route) {
  const auto p = leaf_probs(circuit, probs);
  const auto d = defense_bytes(circuit, defense);
  const std::size_t n = circuit.risk_count();
  if (n > limits.max_exact_leaves || n > 62)
    throw Error(ErrorCode::kTooLarge, std::to_string(n),
                "exact probability supports at most " + std::to_string(limits.max_exact_leaves) +
                    " risk leaves, model has " + std::to_string(n));
  ProbResult r;
  r.method = ProbMethod::kExact;
  r.value = route == ExactRoute::kEnumeration ? kernels::omp::enumerate_probability(circuit, p, d)
                                              : Decomposition(circuit, p, d).run();
  r.value = std::clamp(r.value, 0.0, 1.0);
  return r;
}

ProbResult tle_probability_exact(const Model& model, const ProbAssignment& probs, const DefenseSet& defense,
                                 const Limits& limits, ExactRoute route) {
  return tle_probability_exact(Circuit::compile(model), probs, defense, limits, route);
}

ProbResult tle_probability_mc(const Circuit& circuit, const ProbAssignment& probs, const DefenseSet& defense,
                              std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("Monte-Carlo needs at least one sample");
  const auto p = leaf_probs(circuit, probs);
  const auto d = defense_bytes(circuit, defense);
  const std::uint64_t hits = kernels::omp::monte_carlo_hits(circuit, p, d, samples, seed);
  ProbResult r;
  r.method = ProbMethod::kMonteCarlo;
  r.value = double(hits) / double(samples);
  r.samples = samples;
  r.seed = seed;
  r.std_error = std::sqrt(r.value * (1.0 - r.value) / double(samples));
  return r;
}

ProbResult tle_probability_mc(const Model& model, const ProbAssignment& probs, const DefenseSet& defense,
                              std::uint64_t samples, std::uint64_t seed) {
  return tle_probability_mc(Circuit::compile(model), probs, defense, samples, seed);
}

std::vector<std::pair<DefenseSet, ProbResult>> defense_probability_sweep(const Circuit& circuit,
                                                                         const ProbAssignment& probs,
                                                                         const std::vector<DefenseSet>& subsets,
                                                                         const Limits& limits) {
  std::vector<std::pair<DefenseSet, ProbResult>> out;
  out.reserve(subsets.size());
  for (const auto& s : subsets) out.emplace_back(s, tle_probability_exact(circuit, probs, s, limits));
  return out;
}

std::vector<std::pair<DefenseSet, ProbResult>> defense_probability_sweep(const Model& model,
                                                                         const ProbAssignment& probs,
                                                                         const std::vector<DefenseSet>& subsets,
                                                                         const Limits& limits) {
  return defense_probability_sweep(Circuit::compile(model), probs, subsets, limits);
}

}  // namespace afdt
