#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace superspace {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed polynomial text or JSON. `position` is a zero-based offset into
// the text input (0 for JSON documents).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A Gamma-function pole was hit, i.e. M = m - 2n lies in {0, -2, -4, ...}
// where the formula in question is undefined.
class PoleError : public Error {
 public:
  using Error::Error;
};

// Input is not homogeneous, or its degree is outside the admissible range.
class DegreeError : public Error {
 public:
  using Error::Error;
};

// Operands live over different (m, n).
class ParamsMismatch : public Error {
 public:
  using Error::Error;
};

class NotHarmonicError : public Error {
 public:
  using Error::Error;
};

// Caller-side contract violation (bad index, wrong matrix size, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An identity that must hold by construction failed (e.g. a decomposition
// did not reconstruct its input). Indicates a bug, not bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace superspace
