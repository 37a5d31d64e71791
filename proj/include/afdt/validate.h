#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "afdt/model.h"

namespace afdt {

enum class ViolationCode {
  kCycle,
  kDuplicateId,
  kBadArity,
  kBdsOutsideDefense,
  kBasInDefenseSlot,
  kSlotGate,
  kUnreachable,
  kMissingTle,
  kDanglingRef,
};

std::string_view violation_code_name(ViolationCode code);

struct Violation {
  ViolationCode code;
  NodeId node;
  std::string message;

  bool operator==(const Violation&) const = default;
};

/// Structural and typing checks. Returns violations sorted by node id, then
/// code; an empty result means the model is a well-formed, stratified AFDT:
///
///  - BDS leaves occur only below the defense slot of an INH gate;
///  - a defense slot holds BDS leaves combined by AND/OR;
///  - a disabler slot holds BAS/BCF leaves combined by AND/OR;
///  - event slots and ordinary gate inputs hold no BDS leaves.
std::vector<Violation> validate(const Model& model);

}  // namespace afdt
