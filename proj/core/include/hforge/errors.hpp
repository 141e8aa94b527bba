#pragma once

#include <stdexcept>
#include <string>

namespace hforge {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by an exact zero (scalar, polynomial, or fraction).
class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// A precondition on an argument was violated (negative index, a < b, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A machine-width quantity (exponent, index) left its checked range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace hforge
