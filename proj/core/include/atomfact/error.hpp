#pragma once

#include <stdexcept>
#include <string>

namespace atomfact {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape mismatch, out-of-range index, or non-square input where a square one is required.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Mathematically undefined request: division by zero, duplicate interpolation nodes, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The matrix to factor has zero determinant.
class SingularInputError : public Error {
 public:
  SingularInputError() : Error("singular input") {}
};

/// The matrix to factor is invertible over Q[x]; there is nothing to factor.
class UnitInputError : public Error {
 public:
  UnitInputError() : Error("unit input, nothing to factor") {}
};

/// An internal invariant failed. Always a bug upstream of the throwing site.
class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& what)
      : Error("invariant violation: " + what) {}
};

/// Malformed textual input (rational literal, JSON document, ...).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace atomfact
