#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace toric {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed fan text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed input that violates a Fan invariant (non-primitive ray, ...).
class ValidationError : public ParseError {
 public:
  using ParseError::ParseError;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Refusal to run Frobenius or cohomology computations.
class FanNotSmoothComplete : public Error {
 public:
  using Error::Error;
};

class EffectiveConeNotPointed : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NonStabilized : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failures. Seeing one of these is a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class TorsionCokernel : public InternalError {
 public:
  using InternalError::InternalError;
};

class UnboundedContributingChamber : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace toric
