#pragma once

#include <stdexcept>
#include <string>

namespace cmpart {

/// Raised when an operation receives arguments that violate its preconditions
/// (malformed faces, unknown vertices, out-of-range dimensions, ...).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised by the facet-list reader; carries the 1-based line number.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cmpart
