#pragma once

#include <stdexcept>
#include <string>

namespace rigidity {

/// Raised when caller-supplied parameters violate an operation's domain.
/// The CLI maps this to exit status 1.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal consistency check fails (a bug, not bad input).
/// The CLI maps this to exit status 2.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rigidity
