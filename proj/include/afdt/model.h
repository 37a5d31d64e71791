#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace afdt {

using NodeId = std::string;

enum class NodeKind { kBas, kBcf, kBds, kAnd, kOr, kVot, kInh };

bool is_leaf(NodeKind kind);
/// BAS or BCF: the leaves that take part in cut sets.
bool is_risk_leaf(NodeKind kind);
std::string_view kind_name(NodeKind kind);  // "bas", "and", ...
std::optional<NodeKind> kind_from_name(std::string_view name);

/// One node of an attack-fault-defense tree.
///
/// Ordinary gates (AND, OR, VOT) list their inputs in `children`. An INH gate
/// leaves `children` empty and fills the three slots instead: the event it
/// passes through, the defense subtree that blocks it, and an optional
/// disabler subtree that nullifies the defense.
struct Node {
  NodeId id;
  NodeKind kind = NodeKind::kBas;
  int k = 0;  // VOT threshold
  std::vector<NodeId> children;
  NodeId event;
  NodeId defense;
  std::optional<NodeId> disabler;
  std::optional<std::string> label;  // display name, defaults to id

  const std::string& display() const { return label ? *label : id; }
  /// Children in slot order; for INH: event, defense, then disabler.
  std::vector<NodeId> inputs() const;

  bool operator==(const Node&) const = default;
};

/// A model is a set of nodes with one designated top-level event.
///
/// Nodes are kept in insertion order so that malformed inputs (duplicate ids,
/// dangling references) can still be represented and reported by validate().
/// Equality ignores node order.
class Model {
 public:
  Model() = default;

  void add(Node node);
  void set_tle(NodeId tle) { tle_ = std::move(tle); }
  void set_name(std::optional<std::string> name) { name_ = std::move(name); }
  void set_description(std::optional<std::string> d) { description_ = std::move(d); }

  const std::vector<Node>& nodes() const { return nodes_; }
  const NodeId& tle() const { return tle_; }
  const std::optional<std::string>& name() const { return name_; }
  const std::optional<std::string>& description() const { return description_; }

  /// First node with the given id, or nullptr.
  const Node* find(std::string_view id) const;
  const Node& at(std::string_view id) const;

  /// Nodes sorted by id.
  std::vector<const Node*> sorted_nodes() const;
  /// Display label of `id`, or `id` itself when the node is unknown.
  const std::string& display(const std::string& id) const;

  friend bool operator==(const Model& a, const Model& b);

 private:
  std::vector<Node> nodes_;
  std::unordered_map<std::string, std::size_t> index_;
  NodeId tle_;
  std::optional<std::string> name_;
  std::optional<std::string> description_;
};

struct LeafPartition {
  std::vector<NodeId> bas;
  std::vector<NodeId> bcf;
  std::vector<NodeId> bds;

  /// bas ∪ bcf, sorted.
  std::vector<NodeId> risk() const;
};

/// Leaf ids by kind, each list sorted.
LeafPartition leaves(const Model& model);

enum class ErrorCode {
  kUnknownLeaf,
  kInvalidModel,
  kUnknownDefense,
  kBudgetExceeded,
  kTooManyDefenses,
  kTooLarge,
  kMissingProb,
  kBadProb,
  kSchemaError,
};

std::string_view error_code_name(ErrorCode code);

/// Failure of an analysis operation. `subject` names the offending node,
/// JSON pointer or limit, depending on the code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string subject, const std::string& message);

  ErrorCode code() const { return code_; }
  const std::string& subject() const { return subject_; }

 private:
  ErrorCode code_;
  std::string subject_;
};

}  // namespace afdt
