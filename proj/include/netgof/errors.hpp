#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netgof {

/// Argument outside an operation's documented domain.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed edge-list input. `line()` is 1-based, 0 when not line specific.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Two-colour calibration produced a probability outside [0, 1].
class CalibrationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exhaustive enumeration would exceed its subset budget.
class GuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace netgof
