#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gnfakit {

enum class ErrorCode {
  Parse,
  SymbolNotInAlphabet,
  Validation,
  EmptyLanguage,
  NonAtomicLabel,
  UnknownState,
  RipEndpoint,
  EmptyTrace,
  Json,
  Io,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

// Parse failure with the 0-based offset into the input text.
class ParseError : public Error {
public:
  ParseError(ErrorCode code, std::size_t position, const std::string& what)
      : Error(code, what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Machine validation failure carrying every violated invariant.
class ValidationError : public Error {
public:
  explicit ValidationError(std::vector<std::string> issues)
      : Error(ErrorCode::Validation, join(issues)), issues_(std::move(issues)) {}

  const std::vector<std::string>& issues() const { return issues_; }

private:
  static std::string join(const std::vector<std::string>& issues) {
    std::string out = "invalid machine:";
    for (const auto& issue : issues) {
      out += "\n  - " + issue;
    }
    return out;
  }

  std::vector<std::string> issues_;
};

}  // namespace gnfakit
