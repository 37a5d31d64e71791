#pragma once

#include <string>

#include "afdt/model.h"

namespace afdt::dot {

/// Graphviz rendering: one DOT node per model node, edges from gates to their
/// inputs. Attack steps are red circles, component failures orange circles,
/// defenses green circles; INH defense edges are dashed and disabler edges
/// dotted. Output is deterministic (nodes in id order).
std::string to_dot(const Model& model);

}  // namespace afdt::dot
