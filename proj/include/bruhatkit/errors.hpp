#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bruhatkit {

// Domain error with a stable machine-readable code ("NotAUnit",
// "NotComparable", ...).  The CLI maps these to exit code 3.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Malformed input (bad JSON, unknown field spec, ...).  CLI exit code 2.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace bruhatkit
