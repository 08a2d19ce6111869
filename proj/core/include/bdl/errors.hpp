#pragma once

#include <stdexcept>
#include <string>

namespace bdl {

/// Base class for every error raised by the library. Each subclass maps to
/// one CLI exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 1; }
};

/// Malformed input text.
class ParseError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
};

/// A value outside its admissible range (generator index, strand count, ...).
class RangeError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
};

/// Operands that cannot be combined (strand or variable count mismatch,
/// non-square matrix, off-torus evaluation point).
class DomainError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
};

/// The request does not apply to this input (e.g. the B3 oracle for n != 3).
class NotApplicable : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

/// A configured size cap was exceeded; raised instead of truncating.
class ResourceLimit : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 4; }
};

}  // namespace bdl
