#include <array>
#include <cctype>

#include "afdt/dsl.h"

namespace afdt::dsl {

namespace {

constexpr std::array<std::string_view, 3> kReserved{"toplevel", "model", "description"};

std::string quote_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string quote_id(std::string_view id) {
  bool bare = !id.empty();
  for (char c : id)
    bare = bare && (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-');
  for (auto r : kReserved) bare = bare && id != r;
  return bare ? std::string(id) : quote_string(id);
}

std::string serialize(const Model& model) {
  std::string out = "toplevel " + quote_id(model.tle()) + ";\n";
  if (model.name()) out += "model " + quote_string(*model.name()) + ";\n";
  if (model.description()) out += "description " + quote_string(*model.description()) + ";\n";

  for (const Node* n : model.sorted_nodes()) {
    out += quote_id(n->id);
    out += ' ';
    out += kind_name(n->kind);
    switch (n->kind) {
      case NodeKind::kVot:
        out += ' ' + std::to_string(n->k) + " of";
        [[fallthrough]];
      case NodeKind::kAnd:
      case NodeKind::kOr:
        for (const auto& c : n->children) out += ' ' + quote_id(c);
        break;
      case NodeKind::kInh:
        out += " event=" + quote_id(n->event) + " defense=" + quote_id(n->defense);
        if (n->disabler) out += " disabler=" + quote_id(*n->disabler);
        break;
      default:
        break;
    }
    if (n->label) out += " label=" + quote_string(*n->label);
    out += ";\n";
  }
  return out;
}

}  // namespace afdt::dsl
