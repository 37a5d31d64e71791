#include <cctype>
#include <charconv>
#include <map>
#include <set>

#include "afdt/dsl.h"

namespace afdt::dsl {

std::string_view parse_code_name(ParseCode code) {
  switch (code) {
    case ParseCode::kSyntax: return "SYNTAX";
    case ParseCode::kUnknownKeyword: return "UNKNOWN_KEYWORD";
    case ParseCode::kDuplicateDef: return "DUPLICATE_DEF";
    case ParseCode::kBadNumber: return "BAD_NUMBER";
  }
  return "SYNTAX";
}

std::string to_string(const ParseError& e) {
  return std::to_string(e.span.line) + ":" + std::to_string(e.span.column) + ": " +
         std::string(parse_code_name(e.code)) + " " + e.message;
}

namespace {

bool is_bare_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
}

struct Token {
  enum Kind { kBare, kQuoted, kEquals, kSemicolon } kind;
  std::string text;
  SourceSpan span;

  bool is(std::string_view word) const { return kind == kBare && text == word; }
  bool is_id() const { return kind == kBare || kind == kQuoted; }
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  // Returns false at end of input. Lexical errors are appended to `errors`
  // and the offending character skipped.
  bool next(Token& tok, std::vector<ParseError>& errors) {
    for (;;) {
      skip_space_and_comments();
      if (pos_ >= src_.size()) return false;
      SourceSpan start{line_, col_, 1};
      char c = src_[pos_];
      if (c == ';' || c == '=') {
        advance();
        tok = {c == ';' ? Token::kSemicolon : Token::kEquals, std::string(1, c), start};
        return true;
      }
      if (c == '"') {
        if (lex_quoted(tok, start, errors)) return true;
        continue;
      }
      if (is_bare_char(c)) {
        std::string text;
        while (pos_ < src_.size() && is_bare_char(src_[pos_])) {
          text += src_[pos_];
          advance();
        }
        start.length = int(text.size());
        tok = {Token::kBare, std::move(text), start};
        return true;
      }
      errors.push_back({start, ParseCode::kSyntax, std::string("unexpected character '") + c + "'"});
      advance();
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) {
      ++col_;  // count code points, not UTF-8 continuation bytes
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      if (std::isspace(static_cast<unsigned char>(src_[pos_]))) {
        advance();
      } else if (src_.substr(pos_, 2) == "//") {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  bool lex_quoted(Token& tok, SourceSpan start, std::vector<ParseError>& errors) {
    advance();  // opening quote
    std::string text;
    int length = 1;
    while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
      char c = src_[pos_];
      if (c == '\\') {
        char esc = pos_ + 1 < src_.size() ? src_[pos_ + 1] : '\0';
        if (esc != '"' && esc != '\\') {
          errors.push_back({{line_, col_, 2}, ParseCode::kSyntax, "invalid escape in quoted identifier"});
          advance();
          continue;
        }
        advance();
        ++length;
        c = esc;
      }
      text += c;
      advance();
      ++length;
    }
    if (pos_ >= src_.size() || src_[pos_] != '"') {
      start.length = length;
      errors.push_back({start, ParseCode::kSyntax, "unterminated quoted identifier"});
      return false;
    }
    advance();
    start.length = length + 1;
    tok = {Token::kQuoted, std::move(text), start};
    return true;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  ParseResult run(std::string_view text) {
    Lexer lexer(text);
    std::vector<Token> stmt;
    Token tok;
    while (lexer.next(tok, errors_)) {
      if (tok.kind == Token::kSemicolon) {
        if (stmt.empty())
          error(tok.span, ParseCode::kSyntax, "empty statement");
        else
          statement(stmt, tok);
        stmt.clear();
      } else {
        stmt.push_back(std::move(tok));
      }
    }
    if (!stmt.empty()) error(stmt.back().span, ParseCode::kSyntax, "missing ';' after statement");
    if (!tle_ && errors_.empty()) error({1, 1, 0}, ParseCode::kSyntax, "missing 'toplevel' statement");

    ParseResult result;
    if (!errors_.empty()) {
      result.errors = std::move(errors_);
      return result;
    }
    model_.set_tle(*tle_);
    result.model = std::move(model_);
    return result;
  }

 private:
  void error(SourceSpan span, ParseCode code, std::string message) {
    errors_.push_back({span, code, std::move(message)});
  }

  void statement(const std::vector<Token>& t, const Token& semi) {
    if (t[0].is("toplevel")) {
      if (t.size() != 2 || !t[1].is_id()) {
        error(t[0].span, ParseCode::kSyntax, "expected 'toplevel <id>;'");
      } else if (tle_) {
        error(t[0].span, ParseCode::kDuplicateDef, "second 'toplevel' statement");
      } else {
        tle_ = t[1].text;
      }
      return;
    }
    if ((t[0].is("model") || t[0].is("description")) && t.size() >= 2 && t[1].kind == Token::kQuoted) {
      if (t.size() != 2) {
        error(t[2].span, ParseCode::kSyntax, "unexpected token after " + t[0].text);
        return;
      }
      bool& seen = t[0].text == "model" ? seen_name_ : seen_description_;
      if (seen) {
        error(t[0].span, ParseCode::kDuplicateDef, "second '" + t[0].text + "' statement");
        return;
      }
      seen = true;
      if (t[0].text == "model")
        model_.set_name(t[1].text);
      else
        model_.set_description(t[1].text);
      return;
    }
    node_statement(t, semi);
  }

  void node_statement(const std::vector<Token>& t, const Token& semi) {
    if (!t[0].is_id()) {
      error(t[0].span, ParseCode::kSyntax, "expected node identifier");
      return;
    }
    if (t.size() < 2) {
      error(semi.span, ParseCode::kSyntax, "expected node kind after '" + t[0].text + "'");
      return;
    }
    if (t[1].kind != Token::kBare) {
      error(t[1].span, ParseCode::kSyntax, "expected node kind keyword");
      return;
    }
    auto kind = kind_from_name(t[1].text);
    if (!kind) {
      error(t[1].span, ParseCode::kUnknownKeyword, "unknown node kind '" + t[1].text + "'");
      return;
    }

    Node node;
    node.id = t[0].text;
    node.kind = *kind;
    std::size_t i = 2;

    if (node.kind == NodeKind::kVot) {
      if (i >= t.size()) {
        error(semi.span, ParseCode::kSyntax, "expected threshold after 'vot'");
        return;
      }
      const Token& num = t[i++];
      int k = 0;
      auto [ptr, ec] = std::from_chars(num.text.data(), num.text.data() + num.text.size(), k);
      if (num.kind != Token::kBare || ec != std::errc() || ptr != num.text.data() + num.text.size() ||
          k < 1) {
        error(num.span, ParseCode::kBadNumber, "vot threshold must be a positive integer");
        return;
      }
      node.k = k;
      if (i >= t.size() || !t[i].is("of")) {
        error(i < t.size() ? t[i].span : semi.span, ParseCode::kSyntax, "expected 'of' after threshold");
        return;
      }
      ++i;
    }

    auto starts_attribute = [&](std::size_t j) {
      return j + 1 < t.size() && t[j].kind == Token::kBare && t[j + 1].kind == Token::kEquals;
    };
    while (i < t.size() && !starts_attribute(i)) {
      if (!t[i].is_id()) {
        error(t[i].span, ParseCode::kSyntax, "unexpected '" + t[i].text + "'");
        return;
      }
      if (is_leaf(node.kind) || node.kind == NodeKind::kInh) {
        error(t[i].span, ParseCode::kSyntax,
              std::string(kind_name(node.kind)) + " takes no positional inputs");
        return;
      }
      node.children.push_back(t[i++].text);
    }

    std::set<std::string> seen_attrs;
    while (i < t.size()) {
      if (!starts_attribute(i) || i + 2 >= t.size() || !t[i + 2].is_id()) {
        error(t[i].span, ParseCode::kSyntax, "expected 'name=value'");
        return;
      }
      const Token& name = t[i];
      const std::string& value = t[i + 2].text;
      i += 3;
      if (!seen_attrs.insert(name.text).second) {
        error(name.span, ParseCode::kDuplicateDef, "attribute '" + name.text + "' given twice");
        return;
      }
      const bool inh = node.kind == NodeKind::kInh;
      if (name.text == "label") {
        node.label = value;
      } else if (inh && name.text == "event") {
        node.event = value;
      } else if (inh && name.text == "defense") {
        node.defense = value;
      } else if (inh && name.text == "disabler") {
        node.disabler = value;
      } else {
        error(name.span, ParseCode::kUnknownKeyword, "unknown attribute '" + name.text + "'");
        return;
      }
    }
    if (node.kind == NodeKind::kInh && (node.event.empty() || node.defense.empty())) {
      error(t[0].span, ParseCode::kSyntax, "inh requires event= and defense=");
      return;
    }

    if (!defined_.insert(node.id).second) {
      error(t[0].span, ParseCode::kDuplicateDef, "node '" + node.id + "' defined twice");
      return;
    }
    model_.add(std::move(node));
  }

  Model model_;
  std::optional<std::string> tle_;
  bool seen_name_ = false;
  bool seen_description_ = false;
  std::set<std::string> defined_;
  std::vector<ParseError> errors_;
};

}  // namespace

ParseResult parse(std::string_view text) { return Parser().run(text); }

}  // namespace afdt::dsl
