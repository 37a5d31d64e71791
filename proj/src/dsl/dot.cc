#include "afdt/dot.h"

#include <sstream>

namespace afdt::dot {

namespace {

std::string q(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

std::string gate_label(const Node& n) {
  switch (n.kind) {
    case NodeKind::kAnd: return "AND";
    case NodeKind::kOr: return "OR";
    case NodeKind::kVot: return "VOT(" + std::to_string(n.k) + "/" + std::to_string(n.children.size()) + ")";
    case NodeKind::kInh: return "INH";
    default: return "";
  }
}

}  // namespace

std::string to_dot(const Model& model) {
  std::ostringstream os;
  os << "digraph " << q(model.name().value_or("afdt")) << " {\n";
  os << "  rankdir=TB;\n";
  os << "  node [fontname=\"Helvetica\"];\n";

  for (const Node* n : model.sorted_nodes()) {
    os << "  " << q(n->id) << " [";
    switch (n->kind) {
      case NodeKind::kBas:
        os << "shape=circle, style=filled, fillcolor=\"#f4a6a6\", label=" << q(n->display());
        break;
      case NodeKind::kBcf:
        os << "shape=circle, style=filled, fillcolor=\"#f8d49a\", label=" << q(n->display());
        break;
      case NodeKind::kBds:
        os << "shape=circle, style=filled, fillcolor=\"#a8dba8\", label=" << q(n->display());
        break;
      default: {
        // Line break goes in unescaped, after quoting the display name.
        std::string label = q(n->display());
        label.insert(label.size() - 1, "\\n" + gate_label(*n));
        os << "shape=box, label=" << label;
        break;
      }
    }
    if (n->id == model.tle()) os << ", peripheries=2";
    os << "];\n";
  }

  for (const Node* n : model.sorted_nodes()) {
    if (n->kind == NodeKind::kInh) {
      os << "  " << q(n->id) << " -> " << q(n->event) << ";\n";
      os << "  " << q(n->id) << " -> " << q(n->defense) << " [style=dashed, color=\"#2e7d32\"];\n";
      if (n->disabler) os << "  " << q(n->id) << " -> " << q(*n->disabler) << " [style=dotted];\n";
    } else {
      for (const auto& c : n->children) os << "  " << q(n->id) << " -> " << q(c) << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace afdt::dot
