#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frobkit {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Values from structurally different ring contexts were combined.
class ContextMismatchError : public Error {
 public:
  using Error::Error;
};

/// A documented operation precondition does not hold for the given inputs.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An iteration or exponent limit was reached before completion.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// Integer overflow in exponent arithmetic (treated as a cap violation).
class OverflowError : public CapExceededError {
 public:
  using CapExceededError::CapExceededError;
};

/// Text input rejected. `position` is a 1-based character offset into the
/// offending string; `line` is a 1-based line number when parsing files
/// (0 when not applicable).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position, std::size_t line = 0)
      : Error(message), position_(position), line_(line) {}

  std::size_t position() const { return position_; }
  std::size_t line() const { return line_; }

  ParseError at_line(std::size_t line) const {
    return ParseError(what(), position_, line);
  }

 private:
  std::size_t position_;
  std::size_t line_;
};

}  // namespace frobkit
