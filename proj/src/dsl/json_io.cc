#include "afdt/json_io.h"

namespace afdt::json_io {

using nlohmann::json;

json to_json(const Model& model) {
  json doc = json::object();
  if (model.name()) doc["name"] = *model.name();
  if (model.description()) doc["description"] = *model.description();
  doc["tle"] = model.tle();
  json nodes = json::array();
  for (const Node* n : model.sorted_nodes()) {
    json j = {{"id", n->id}, {"kind", std::string(kind_name(n->kind))}};
    if (n->kind == NodeKind::kVot) j["k"] = n->k;
    if (n->kind == NodeKind::kAnd || n->kind == NodeKind::kOr || n->kind == NodeKind::kVot)
      j["children"] = n->children;
    if (n->kind == NodeKind::kInh) {
      j["event"] = n->event;
      j["defense"] = n->defense;
      if (n->disabler) j["disabler"] = *n->disabler;
    }
    if (n->label) j["label"] = *n->label;
    nodes.push_back(std::move(j));
  }
  doc["nodes"] = std::move(nodes);
  return doc;
}

namespace {

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what) {
  throw Error(ErrorCode::kSchemaError, pointer, "schema error at " + pointer + ": " + what);
}

std::string need_string(const json& obj, const std::string& key, const std::string& at) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(at + "/" + key, "missing required string");
  if (!it->is_string()) schema_error(at + "/" + key, "expected a string");
  return it->get<std::string>();
}

std::optional<std::string> opt_string(const json& obj, const std::string& key, const std::string& at) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) schema_error(at + "/" + key, "expected a string");
  return it->get<std::string>();
}

}  // namespace

Model from_json(const json& doc) {
  if (!doc.is_object()) schema_error("", "expected an object");
  Model model;
  model.set_name(opt_string(doc, "name", ""));
  model.set_description(opt_string(doc, "description", ""));
  model.set_tle(need_string(doc, "tle", ""));

  auto nodes = doc.find("nodes");
  if (nodes == doc.end()) schema_error("/nodes", "missing required array");
  if (!nodes->is_array()) schema_error("/nodes", "expected an array");

  for (std::size_t i = 0; i < nodes->size(); ++i) {
    const json& j = (*nodes)[i];
    const std::string at = "/nodes/" + std::to_string(i);
    if (!j.is_object()) schema_error(at, "expected an object");

    Node n;
    n.id = need_string(j, "id", at);
    if (n.id.empty()) schema_error(at + "/id", "empty id");
    auto kind = kind_from_name(need_string(j, "kind", at));
    if (!kind) schema_error(at + "/kind", "unknown kind");
    n.kind = *kind;
    n.label = opt_string(j, "label", at);

    if (auto k = j.find("k"); k != j.end()) {
      if (!k->is_number_integer()) schema_error(at + "/k", "expected an integer");
      n.k = k->get<int>();
    } else if (n.kind == NodeKind::kVot) {
      schema_error(at + "/k", "missing threshold");
    }
    if (auto c = j.find("children"); c != j.end()) {
      if (!c->is_array()) schema_error(at + "/children", "expected an array");
      for (std::size_t ci = 0; ci < c->size(); ++ci) {
        if (!(*c)[ci].is_string()) schema_error(at + "/children/" + std::to_string(ci), "expected a string");
        n.children.push_back((*c)[ci].get<std::string>());
      }
    }
    if (n.kind == NodeKind::kInh) {
      n.event = need_string(j, "event", at);
      n.defense = need_string(j, "defense", at);
      n.disabler = opt_string(j, "disabler", at);
    } else {
      for (const char* slot : {"event", "defense", "disabler"})
        if (j.contains(slot)) schema_error(at + "/" + slot, "only inh nodes have slots");
    }
    model.add(std::move(n));
  }
  return model;
}

}  // namespace afdt::json_io
