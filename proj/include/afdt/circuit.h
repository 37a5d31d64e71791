#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "afdt/model.h"

namespace afdt {

/// A validated model flattened into a topologically ordered program.
///
/// Risk leaves (BAS/BCF) and defense leaves (BDS) are numbered separately in
/// id order. Every node is evaluated once per call, so shared subtrees cost
/// nothing extra. Circuits are immutable and safe to share across threads;
/// each caller supplies its own scratch buffer.
class Circuit {
 public:
  enum class Op : std::uint8_t { kRisk, kDefense, kAnd, kOr, kVot, kInh };

  struct Gate {
    Op op;
    std::uint32_t leaf = 0;   // kRisk / kDefense: leaf number
    std::uint32_t k = 0;      // kVot threshold
    std::uint32_t first = 0;  // operand range in operands()
    std::uint32_t count = 0;
    std::int32_t event = -1, defense = -1, disabler = -1;  // kInh slots
  };

  /// Throws Error(kInvalidModel) when validate() reports violations.
  static Circuit compile(const Model& model);

  std::size_t risk_count() const { return risk_ids_.size(); }
  std::size_t defense_count() const { return defense_ids_.size(); }
  const std::vector<NodeId>& risk_ids() const { return risk_ids_; }
  const std::vector<NodeId>& defense_ids() const { return defense_ids_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<std::uint32_t>& operands() const { return operands_; }
  std::size_t size() const { return gates_.size(); }
  /// Gate index of the top-level event (always the last gate).
  std::size_t root() const { return gates_.size() - 1; }
  const NodeId& node_id(std::size_t gate) const { return gate_ids_[gate]; }

  /// Risk leaf number of `id`, or -1.
  int risk_index(const std::string& id) const;
  int defense_index(const std::string& id) const;

  /// Evaluates with per-leaf lookups `risk(i)` and `defense(i)`.
  template <class RiskFn, class DefenseFn>
  bool evaluate(RiskFn&& risk, DefenseFn&& defense, std::vector<std::uint8_t>& scratch) const;

  bool evaluate(std::span<const std::uint8_t> risk, std::span<const std::uint8_t> defense) const;

  /// Masks hold one bit per leaf; usable while the leaf count is at most 64.
  bool evaluate_masks(std::uint64_t risk, std::uint64_t defense,
                      std::vector<std::uint8_t>& scratch) const {
    return evaluate([risk](std::uint32_t i) { return (risk >> i) & 1U; },
                    [defense](std::uint32_t i) { return (defense >> i) & 1U; }, scratch);
  }

 private:
  std::vector<Gate> gates_;
  std::vector<std::uint32_t> operands_;
  std::vector<NodeId> gate_ids_;
  std::vector<NodeId> risk_ids_;
  std::vector<NodeId> defense_ids_;
  std::unordered_map<std::string, int> risk_index_;
  std::unordered_map<std::string, int> defense_index_;
};

template <class RiskFn, class DefenseFn>
bool Circuit::evaluate(RiskFn&& risk, DefenseFn&& defense, std::vector<std::uint8_t>& v) const {
  v.resize(gates_.size());
  for (std::size_t g = 0; g < gates_.size(); ++g) {
    const Gate& gate = gates_[g];
    const std::uint32_t* in = operands_.data() + gate.first;
    bool out = false;
    switch (gate.op) {
      case Op::kRisk: out = risk(gate.leaf); break;
      case Op::kDefense: out = defense(gate.leaf); break;
      case Op::kAnd:
        out = true;
        for (std::uint32_t i = 0; i < gate.count && out; ++i) out = v[in[i]];
        break;
      case Op::kOr:
        for (std::uint32_t i = 0; i < gate.count && !out; ++i) out = v[in[i]];
        break;
      case Op::kVot: {
        std::uint32_t active = 0;
        for (std::uint32_t i = 0; i < gate.count; ++i) active += v[in[i]];
        out = active >= gate.k;
        break;
      }
      case Op::kInh: {
        const bool blocked = v[gate.defense] && !(gate.disabler >= 0 && v[gate.disabler]);
        out = v[gate.event] && !blocked;
        break;
      }
    }
    v[g] = out;
  }
  return v.back();
}

/// Leaves named in an assignment: BAS/BCF members have occurred, BDS members
/// are deployed.
using Assignment = std::vector<NodeId>;

/// Activation of the top-level event. Throws Error(kUnknownLeaf) for ids that
/// are not leaves of the model and Error(kInvalidModel) for malformed models.
bool evaluate(const Model& model, const Assignment& active);
bool evaluate(const Circuit& circuit, const Assignment& active);

}  // namespace afdt
