#pragma once

#include <stdexcept>
#include <string>

namespace spinal {

/// Raised when caller-supplied data violates a documented precondition
/// (bad dimensions, malformed literal, unknown vertex, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal postcondition fails. Seeing one is a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace spinal
