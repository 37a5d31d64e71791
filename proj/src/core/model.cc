#include "afdt/model.h"

#include <algorithm>
#include <array>

namespace afdt {

namespace {

constexpr std::array<std::pair<NodeKind, std::string_view>, 7> kKindNames{{
    {NodeKind::kBas, "bas"},
    {NodeKind::kBcf, "bcf"},
    {NodeKind::kBds, "bds"},
    {NodeKind::kAnd, "and"},
    {NodeKind::kOr, "or"},
    {NodeKind::kVot, "vot"},
    {NodeKind::kInh, "inh"},
}};

}  // namespace

bool is_leaf(NodeKind kind) {
  return kind == NodeKind::kBas || kind == NodeKind::kBcf || kind == NodeKind::kBds;
}

bool is_risk_leaf(NodeKind kind) { return kind == NodeKind::kBas || kind == NodeKind::kBcf; }

std::string_view kind_name(NodeKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "?";
}

std::optional<NodeKind> kind_from_name(std::string_view name) {
  for (const auto& [k, n] : kKindNames)
    if (n == name) return k;
  return std::nullopt;
}

std::vector<NodeId> Node::inputs() const {
  if (kind != NodeKind::kInh) return children;
  std::vector<NodeId> out;
  if (!event.empty()) out.push_back(event);
  if (!defense.empty()) out.push_back(defense);
  if (disabler) out.push_back(*disabler);
  return out;
}

void Model::add(Node node) {
  index_.try_emplace(node.id, nodes_.size());
  nodes_.push_back(std::move(node));
}

const Node* Model::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  return it == index_.end() ? nullptr : &nodes_[it->second];
}

const Node& Model::at(std::string_view id) const {
  if (const Node* n = find(id)) return *n;
  throw Error(ErrorCode::kInvalidModel, std::string(id), "no node '" + std::string(id) + "'");
}

std::vector<const Node*> Model::sorted_nodes() const {
  std::vector<const Node*> out;
  out.reserve(nodes_.size());
  for (const auto& n : nodes_) out.push_back(&n);
  std::stable_sort(out.begin(), out.end(),
                   [](const Node* a, const Node* b) { return a->id < b->id; });
  return out;
}

const std::string& Model::display(const std::string& id) const {
  const Node* n = find(id);
  return n ? n->display() : id;
}

bool operator==(const Model& a, const Model& b) {
  if (a.tle_ != b.tle_ || a.name_ != b.name_ || a.description_ != b.description_ ||
      a.nodes_.size() != b.nodes_.size())
    return false;
  auto sa = a.sorted_nodes();
  auto sb = b.sorted_nodes();
  for (std::size_t i = 0; i < sa.size(); ++i)
    if (!(*sa[i] == *sb[i])) return false;
  return true;
}

std::vector<NodeId> LeafPartition::risk() const {
  std::vector<NodeId> out = bas;
  out.insert(out.end(), bcf.begin(), bcf.end());
  std::sort(out.begin(), out.end());
  return out;
}

LeafPartition leaves(const Model& model) {
  LeafPartition p;
  for (const Node* n : model.sorted_nodes()) {
    switch (n->kind) {
      case NodeKind::kBas: p.bas.push_back(n->id); break;
      case NodeKind::kBcf: p.bcf.push_back(n->id); break;
      case NodeKind::kBds: p.bds.push_back(n->id); break;
      default: break;
    }
  }
  return p;
}

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownLeaf: return "UNKNOWN_LEAF";
    case ErrorCode::kInvalidModel: return "INVALID_MODEL";
    case ErrorCode::kUnknownDefense: return "UNKNOWN_DEFENSE";
    case ErrorCode::kBudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::kTooManyDefenses: return "TOO_MANY_DEFENSES";
    case ErrorCode::kTooLarge: return "TOO_LARGE";
    case ErrorCode::kMissingProb: return "MISSING_PROB";
    case ErrorCode::kBadProb: return "BAD_PROB";
    case ErrorCode::kSchemaError: return "SCHEMA_ERROR";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, std::string subject, const std::string& message)
    : std::runtime_error(message), code_(code), subject_(std::move(subject)) {}

}  // namespace afdt
