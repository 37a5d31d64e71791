#include "afdt/circuit.h"

#include <functional>
#include <unordered_set>

#include "afdt/validate.h"

namespace afdt {

Circuit Circuit::compile(const Model& model) {
  auto violations = validate(model);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw Error(ErrorCode::kInvalidModel, v.node,
                "invalid model: " + std::string(violation_code_name(v.code)) + " at '" + v.node +
                    "': " + v.message);
  }

  Circuit c;
  auto parts = leaves(model);
  c.risk_ids_ = parts.risk();
  c.defense_ids_ = parts.bds;
  for (std::size_t i = 0; i < c.risk_ids_.size(); ++i) c.risk_index_[c.risk_ids_[i]] = int(i);
  for (std::size_t i = 0; i < c.defense_ids_.size(); ++i) c.defense_index_[c.defense_ids_[i]] = int(i);

  // Post-order numbering yields children before parents and the TLE last.
  std::unordered_map<std::string, std::uint32_t> number;
  std::function<std::uint32_t(const Node&)> emit = [&](const Node& n) -> std::uint32_t {
    if (auto it = number.find(n.id); it != number.end()) return it->second;
    std::vector<std::uint32_t> ins;
    for (const auto& id : n.inputs()) ins.push_back(emit(model.at(id)));

    Gate g{};
    switch (n.kind) {
      case NodeKind::kBas:
      case NodeKind::kBcf:
        g.op = Op::kRisk;
        g.leaf = std::uint32_t(c.risk_index_.at(n.id));
        break;
      case NodeKind::kBds:
        g.op = Op::kDefense;
        g.leaf = std::uint32_t(c.defense_index_.at(n.id));
        break;
      case NodeKind::kAnd: g.op = Op::kAnd; break;
      case NodeKind::kOr: g.op = Op::kOr; break;
      case NodeKind::kVot:
        g.op = Op::kVot;
        g.k = std::uint32_t(n.k);
        break;
      case NodeKind::kInh:
        g.op = Op::kInh;
        g.event = std::int32_t(ins[0]);
        g.defense = std::int32_t(ins[1]);
        if (ins.size() > 2) g.disabler = std::int32_t(ins[2]);
        break;
    }
    g.first = std::uint32_t(c.operands_.size());
    g.count = std::uint32_t(ins.size());
    c.operands_.insert(c.operands_.end(), ins.begin(), ins.end());
    auto idx = std::uint32_t(c.gates_.size());
    c.gates_.push_back(g);
    c.gate_ids_.push_back(n.id);
    number.emplace(n.id, idx);
    return idx;
  };
  emit(model.at(model.tle()));
  return c;
}

int Circuit::risk_index(const std::string& id) const {
  auto it = risk_index_.find(id);
  return it == risk_index_.end() ? -1 : it->second;
}

int Circuit::defense_index(const std::string& id) const {
  auto it = defense_index_.find(id);
  return it == defense_index_.end() ? -1 : it->second;
}

bool Circuit::evaluate(std::span<const std::uint8_t> risk, std::span<const std::uint8_t> defense) const {
  std::vector<std::uint8_t> scratch;
  return evaluate([&](std::uint32_t i) { return risk[i] != 0; },
                  [&](std::uint32_t i) { return defense[i] != 0; }, scratch);
}

bool evaluate(const Circuit& circuit, const Assignment& active) {
  std::vector<std::uint8_t> risk(circuit.risk_count()), defense(circuit.defense_count());
  for (const auto& id : active) {
    if (int r = circuit.risk_index(id); r >= 0) {
      risk[r] = 1;
    } else if (int d = circuit.defense_index(id); d >= 0) {
      defense[d] = 1;
    } else {
      throw Error(ErrorCode::kUnknownLeaf, id, "'" + id + "' is not a leaf of the model");
    }
  }
  return circuit.evaluate(risk, defense);
}

bool evaluate(const Model& model, const Assignment& active) {
  return evaluate(Circuit::compile(model), active);
}

}  // namespace afdt
