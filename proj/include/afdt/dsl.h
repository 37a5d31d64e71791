#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "afdt/model.h"

namespace afdt::dsl {

struct SourceSpan {
  int line = 1;    // 1-based
  int column = 1;  // 1-based
  int length = 0;
};

enum class ParseCode { kSyntax, kUnknownKeyword, kDuplicateDef, kBadNumber };

std::string_view parse_code_name(ParseCode code);

struct ParseError {
  SourceSpan span;
  ParseCode code;
  std::string message;
};

/// "line:col: CODE message"
std::string to_string(const ParseError& e);

struct ParseResult {
  std::optional<Model> model;
  std::vector<ParseError> errors;

  bool ok() const { return model.has_value(); }
};

/// Parses the statement language:
///
///   toplevel <id>;
///   <id> bas|bcf|bds;
///   <id> and|or <id>+;
///   <id> vot <k> of <id>+;
///   <id> inh event=<id> defense=<id> [disabler=<id>];
///
/// Any node statement may end with `label="..."`. Optional metadata
/// statements `model "<name>";` and `description "<text>";`. `//` starts a
/// comment. Identifiers are bare (`[A-Za-z0-9_.-]+`) or double-quoted with
/// `\"` and `\\` escapes.
///
/// Only syntax is checked here; structural problems (dangling references,
/// cycles, arity) are left to validate().
ParseResult parse(std::string_view text);

/// Canonical text: toplevel first, metadata, then nodes in id order.
std::string serialize(const Model& model);

/// Bare form when possible, otherwise a quoted string.
std::string quote_id(std::string_view id);

}  // namespace afdt::dsl
