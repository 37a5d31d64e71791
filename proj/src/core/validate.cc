#include "afdt/validate.h"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace afdt {

std::string_view violation_code_name(ViolationCode code) {
  switch (code) {
    case ViolationCode::kCycle: return "CYCLE";
    case ViolationCode::kDuplicateId: return "DUPLICATE_ID";
    case ViolationCode::kBadArity: return "BAD_ARITY";
    case ViolationCode::kBdsOutsideDefense: return "BDS_OUTSIDE_DEFENSE";
    case ViolationCode::kBasInDefenseSlot: return "BAS_IN_DEFENSE_SLOT";
    case ViolationCode::kSlotGate: return "SLOT_GATE";
    case ViolationCode::kUnreachable: return "UNREACHABLE";
    case ViolationCode::kMissingTle: return "MISSING_TLE";
    case ViolationCode::kDanglingRef: return "DANGLING_REF";
  }
  return "UNKNOWN";
}

namespace {

enum class Slot { kOrdinary, kDefense, kDisabler };

class Checker {
 public:
  explicit Checker(const Model& model) : model_(model) {}

  std::vector<Violation> run() {
    check_ids();
    check_arity_and_refs();
    check_cycles();
    if (model_.tle().empty() || !model_.find(model_.tle())) {
      add(ViolationCode::kMissingTle, model_.tle(), "top-level event is not defined");
    } else {
      check_slots();
      check_reachability();
    }
    std::sort(out_.begin(), out_.end(), [](const Violation& a, const Violation& b) {
      return std::tie(a.node, a.code, a.message) < std::tie(b.node, b.code, b.message);
    });
    out_.erase(std::unique(out_.begin(), out_.end()), out_.end());
    return std::move(out_);
  }

 private:
  void add(ViolationCode code, const NodeId& node, std::string message) {
    out_.push_back({code, node, std::move(message)});
  }

  void check_ids() {
    std::unordered_set<std::string> seen;
    for (const auto& n : model_.nodes())
      if (!seen.insert(n.id).second) add(ViolationCode::kDuplicateId, n.id, "id defined more than once");
  }

  void check_arity_and_refs() {
    for (const auto& n : model_.nodes()) {
      switch (n.kind) {
        case NodeKind::kBas:
        case NodeKind::kBcf:
        case NodeKind::kBds:
          if (!n.children.empty() || !n.event.empty() || !n.defense.empty() || n.disabler)
            add(ViolationCode::kBadArity, n.id, "leaf has inputs");
          break;
        case NodeKind::kAnd:
        case NodeKind::kOr:
          if (n.children.empty()) add(ViolationCode::kBadArity, n.id, "gate has no inputs");
          break;
        case NodeKind::kVot:
          if (n.k < 1 || static_cast<std::size_t>(n.k) > n.children.size())
            add(ViolationCode::kBadArity, n.id,
                "vot threshold " + std::to_string(n.k) + " outside 1.." +
                    std::to_string(n.children.size()));
          break;
        case NodeKind::kInh:
          if (n.event.empty() || n.defense.empty() || !n.children.empty())
            add(ViolationCode::kBadArity, n.id, "inh needs exactly one event and one defense");
          break;
      }
      for (const auto& c : n.inputs())
        if (!model_.find(c)) add(ViolationCode::kDanglingRef, n.id, "reference to undefined '" + c + "'");
    }
  }

  void check_cycles() {
    enum Color : char { kWhite, kGrey, kBlack };
    std::unordered_map<std::string, Color> color;
    // Iterative DFS; a grey target marks a back edge.
    for (const auto& root : model_.nodes()) {
      if (color[root.id] != kWhite) continue;
      std::vector<std::pair<const Node*, std::size_t>> stack{{&root, 0}};
      color[root.id] = kGrey;
      while (!stack.empty()) {
        auto& [node, next] = stack.back();
        auto inputs = node->inputs();
        if (next >= inputs.size()) {
          color[node->id] = kBlack;
          stack.pop_back();
          continue;
        }
        const Node* child = model_.find(inputs[next++]);
        if (!child) continue;
        Color& c = color[child->id];
        if (c == kGrey) {
          add(ViolationCode::kCycle, node->id, "cycle through '" + child->id + "'");
        } else if (c == kWhite) {
          c = kGrey;
          stack.push_back({child, 0});
        }
      }
    }
  }

  void check_slots() {
    std::set<std::pair<std::string, Slot>> visited;
    std::vector<std::pair<const Node*, Slot>> work{{&model_.at(model_.tle()), Slot::kOrdinary}};
    while (!work.empty()) {
      auto [node, slot] = work.back();
      work.pop_back();
      if (!visited.insert({node->id, slot}).second) continue;
      check_in_slot(*node, slot);
      auto push = [&](const NodeId& id, Slot s) {
        if (const Node* c = model_.find(id)) work.push_back({c, s});
      };
      if (node->kind == NodeKind::kInh) {
        push(node->event, slot);
        push(node->defense, Slot::kDefense);
        if (node->disabler) push(*node->disabler, Slot::kDisabler);
      } else {
        for (const auto& c : node->children) push(c, slot);
      }
    }
  }

  void check_in_slot(const Node& n, Slot slot) {
    const bool gate_ok = n.kind == NodeKind::kAnd || n.kind == NodeKind::kOr;
    switch (slot) {
      case Slot::kOrdinary:
        if (n.kind == NodeKind::kBds)
          add(ViolationCode::kBdsOutsideDefense, n.id, "defense leaf outside an inh defense slot");
        break;
      case Slot::kDefense:
        if (is_risk_leaf(n.kind))
          add(ViolationCode::kBasInDefenseSlot, n.id, "attack/fault leaf inside a defense slot");
        else if (!is_leaf(n.kind) && !gate_ok)
          add(ViolationCode::kSlotGate, n.id, "only and/or gates may combine defenses");
        break;
      case Slot::kDisabler:
        if (n.kind == NodeKind::kBds)
          add(ViolationCode::kBdsOutsideDefense, n.id, "defense leaf inside a disabler slot");
        else if (!is_leaf(n.kind) && !gate_ok)
          add(ViolationCode::kSlotGate, n.id, "only and/or gates may combine disablers");
        break;
    }
  }

  void check_reachability() {
    std::unordered_set<std::string> seen{model_.tle()};
    std::vector<const Node*> work{&model_.at(model_.tle())};
    while (!work.empty()) {
      const Node* n = work.back();
      work.pop_back();
      for (const auto& id : n->inputs())
        if (const Node* c = model_.find(id); c && seen.insert(id).second) work.push_back(c);
    }
    for (const auto& n : model_.nodes())
      if (!seen.count(n.id)) add(ViolationCode::kUnreachable, n.id, "not reachable from the top-level event");
  }

  const Model& model_;
  std::vector<Violation> out_;
};

}  // namespace

std::vector<Violation> validate(const Model& model) { return Checker(model).run(); }

}  // namespace afdt
