#include <cctype>
#include <optional>
#include <string_view>

#include "errors.hpp"
#include "regexp.hpp"

namespace gnfakit {

namespace {

// regexp := union
// union  := concat (('U' | '|') concat)*
// concat := term term*
// term   := atom '*'*
// atom   := '(' union ')' | '!' | '~' | singleton
class Parser {
public:
  Parser(std::string_view text, std::string_view sigma)
      : text_(text), sigma_(sigma) {}

  Regexp parse() {
    Regexp r = parse_union();
    skip_ws();
    if (!at_end()) {
      throw ParseError(ErrorCode::Parse, pos_, "unexpected input after expression");
    }
    return r;
  }

private:
  Regexp parse_union() {
    Regexp r = parse_concat();
    while (true) {
      skip_ws();
      if (at_end() || (peek() != 'U' && peek() != '|')) break;
      ++pos_;
      r = Regexp::union_of(std::move(r), parse_concat());
    }
    return r;
  }

  Regexp parse_concat() {
    Regexp r = parse_term();
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c == 'U' || c == '|' || c == ')') break;
      r = Regexp::concat(std::move(r), parse_term());
    }
    return r;
  }

  Regexp parse_term() {
    Regexp r = parse_atom();
    while (true) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      r = Regexp::star(std::move(r));
    }
    return r;
  }

  Regexp parse_atom() {
    skip_ws();
    if (at_end()) {
      throw ParseError(ErrorCode::Parse, pos_, "expected an expression");
    }
    char c = peek();
    if (c == '(') {
      ++pos_;
      Regexp r = parse_union();
      skip_ws();
      if (at_end() || peek() != ')') {
        throw ParseError(ErrorCode::Parse, pos_, "expected ')'");
      }
      ++pos_;
      return r;
    }
    if (c == '!') {
      ++pos_;
      return Regexp::empty();
    }
    if (c == '~') {
      ++pos_;
      return Regexp::null();
    }
    if (std::isalnum(static_cast<unsigned char>(c))) {
      if (sigma_.find(c) == std::string_view::npos) {
        throw ParseError(ErrorCode::SymbolNotInAlphabet, pos_,
                         std::string("symbol '") + c + "' is not in the alphabet");
      }
      ++pos_;
      return Regexp::singleton(c);
    }
    throw ParseError(ErrorCode::Parse, pos_,
                     std::string("unexpected character '") + c + "'");
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::string_view sigma_;
  std::size_t pos_ = 0;
};

}  // namespace

Regexp parse_regexp(std::string_view text, std::string_view sigma) {
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    char c = sigma[i];
    if (!std::isalnum(static_cast<unsigned char>(c)) || c == 'U') {
      throw Error(ErrorCode::Parse,
                  std::string("alphabet symbol '") + c +
                      "' is reserved or not alphanumeric");
    }
    if (sigma.find(c, i + 1) != std::string_view::npos) {
      throw Error(ErrorCode::Parse,
                  std::string("duplicate alphabet symbol '") + c + "'");
    }
  }
  return Parser(text, sigma).parse();
}

}  // namespace gnfakit
