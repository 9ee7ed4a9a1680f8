#pragma once

#include <stdexcept>
#include <string>

namespace gqc4 {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed argument: even block length, zero divisor, mismatched lengths, ...
class ArgumentError : public Error {
  public:
    using Error::Error;
};

/// Polynomial/module division that has no solution (non-unit leading coefficient, inexact quotient).
class DivisionError : public Error {
  public:
    using Error::Error;
};

/// Text or spec-file parse failure. `position` is a 0-based character offset, or -1.
class ParseError : public Error {
  public:
    ParseError(const std::string& what, long position = -1)
        : Error(position >= 0 ? what + " (at position " + std::to_string(position) + ")" : what),
          position_(position) {}
    long position() const noexcept { return position_; }

  private:
    long position_;
};

/// A structural hypothesis (monic pivot, squarefree reduction, ...) does not hold.
class HypothesisError : public Error {
  public:
    using Error::Error;
};

/// Enumeration would exceed the configured size cap.
class CapExceededError : public Error {
  public:
    using Error::Error;
};

}  // namespace gqc4
