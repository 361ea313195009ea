#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace gnfakit::testsupport {

// Small DOT grammar checker covering the digraph subset the library emits:
//   digraph [id] '{' stmt* '}'
//   stmt := id '=' id | id attrs? | id ('->' id)+ attrs? | defaults attrs
//   attrs := '[' (id '=' id (',' | ';')?)* ']'
// Statements may end with ';'. Returns true and clears `error` on success.
class DotChecker {
public:
  bool check(std::string_view text, std::string* error = nullptr) {
    text_ = text;
    pos_ = 0;
    error_.clear();
    bool ok = parse_graph();
    if (error != nullptr) *error = error_;
    return ok;
  }

private:
  bool parse_graph() {
    std::string tok;
    if (!next(tok) || tok != "digraph") return fail("expected 'digraph'");
    if (!next(tok)) return fail("unexpected end of input");
    if (tok != "{") {
      if (!is_id(tok)) return fail("expected a graph name or '{'");
      if (!next(tok) || tok != "{") return fail("expected '{'");
    }
    while (true) {
      if (!next(tok)) return fail("missing '}'");
      if (tok == "}") break;
      if (!parse_statement(tok)) return false;
    }
    if (next(tok)) return fail("trailing content after '}'");
    return true;
  }

  bool parse_statement(std::string head) {
    if (!is_id(head)) return fail("expected an identifier, got '" + head + "'");
    std::string tok;
    if (!peek(tok)) return fail("unterminated statement");
    if (tok == "=") {
      next(tok);
      if (!next(tok) || !is_id(tok)) return fail("expected a value after '='");
    } else if (tok == "->") {
      while (peek(tok) && tok == "->") {
        next(tok);
        if (!next(tok) || !is_id(tok)) return fail("expected a node after '->'");
      }
      if (peek(tok) && tok == "[" && !parse_attrs()) return false;
    } else if (tok == "[") {
      if (!parse_attrs()) return false;
    }
    if (peek(tok) && tok == ";") next(tok);
    return true;
  }

  bool parse_attrs() {
    std::string tok;
    next(tok);  // consume '['
    while (true) {
      if (!next(tok)) return fail("unterminated attribute list");
      if (tok == "]") return true;
      if (!is_id(tok)) return fail("expected an attribute name");
      if (!next(tok) || tok != "=") return fail("expected '=' in attribute");
      if (!next(tok) || !is_id(tok)) return fail("expected an attribute value");
      if (peek(tok) && (tok == "," || tok == ";")) next(tok);
    }
  }

  static bool is_id(const std::string& tok) {
    if (tok.empty()) return false;
    if (tok[0] == '\"') return true;  // lexer validated the quoted form
    for (char c : tok) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.') {
        return false;
      }
    }
    return !(tok == "{" || tok == "}" || tok == "[" || tok == "]" ||
             tok == "=" || tok == ";" || tok == "," || tok == "->");
  }

  bool peek(std::string& tok) {
    std::size_t save = pos_;
    bool ok = next(tok);
    pos_ = save;
    return ok;
  }

  bool next(std::string& tok) {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    if (c == '{' || c == '}' || c == '[' || c == ']' || c == '=' || c == ';' ||
        c == ',') {
      tok.assign(1, c);
      ++pos_;
      return true;
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      tok = "->";
      pos_ += 2;
      return true;
    }
    if (c == '\"') {
      tok = "\"";
      ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '\"') {
        if (text_[pos_] == '\\') ++pos_;
        ++pos_;
      }
      if (pos_ >= text_.size()) {
        tok.clear();
        return false;  // unterminated string
      }
      ++pos_;
      return true;
    }
    tok.clear();
    while (pos_ < text_.size()) {
      c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '{' || c == '}' ||
          c == '[' || c == ']' || c == '=' || c == ';' || c == ',' ||
          (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>')) {
        break;
      }
      tok.push_back(c);
      ++pos_;
    }
    return !tok.empty();
  }

  bool fail(const std::string& message) {
    error_ = message + " (near offset " + std::to_string(pos_) + ")";
    return false;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::string error_;
};

inline bool valid_dot(std::string_view text, std::string* error = nullptr) {
  DotChecker checker;
  return checker.check(text, error);
}

}  // namespace gnfakit::testsupport
