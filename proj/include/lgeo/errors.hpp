#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lgeo {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: bad variable names, invalid pmfs, non-binomial
/// ideals handed to polytope recovery, and so on.
class InputError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

class RingMismatchError : public InputError {
 public:
  RingMismatchError() : InputError("operands live in different rings") {}
  using InputError::InputError;
};

/// Syntax error with a 1-based source location.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError(what + " (line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ")"),
        message_(what),
        line_(line),
        column_(column) {}

  /// The message without the location suffix.
  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// A computation ran but the answer is not trustworthy (degenerate fibers,
/// unstable generic counts).
class ComputationError : public Error {
 public:
  using Error::Error;
};

/// A size cap was hit.
class GuardrailError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

}  // namespace lgeo
