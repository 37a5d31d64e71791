#pragma once

#include <json.hpp>

#include "afdt/model.h"

namespace afdt::json_io {

/// `{name, description?, tle, nodes: [{id, kind, k?, children?, event?,
/// defense?, disabler?, label?}]}` with nodes in id order.
nlohmann::json to_json(const Model& model);

/// Throws Error(kSchemaError) whose subject is the JSON pointer of the first
/// offending value, e.g. "/tle" or "/nodes/3/kind".
Model from_json(const nlohmann::json& doc);

}  // namespace afdt::json_io
