#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cantor {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke a precondition: index out of range, width mismatch, bad
/// parameter.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// lcm of two periods exceeded the configured period cap.
class PeriodCapExceeded : public Error {
 public:
  using Error::Error;
};

/// No repetition among the first `cap` boolean powers.
class TraceNotFound : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagree.
class InternalDisagreement : public Error {
 public:
  using Error::Error;
};

/// A diagonal set equalled an outgoing set, or a witness failed validation.
/// Both are impossible for a correct implementation.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

/// Brute-force oracle asked to work outside its tractability guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  /// 1-based line number, 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cantor
