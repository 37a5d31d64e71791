#pragma once

#include <string_view>
#include <vector>

#include "afdt/model.h"

namespace afdt::corpus {

/// Bundled reference models: "fig3_aft", "fig4_afdt" and "gsaas".
const std::vector<std::string_view>& names();

/// DSL source of a bundled model; throws std::out_of_range for unknown names.
std::string_view text(std::string_view name);

/// Parsed bundled model.
Model load(std::string_view name);

}  // namespace afdt::corpus
