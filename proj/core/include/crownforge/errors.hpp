#pragma once

#include <stdexcept>
#include <string>

namespace crownforge {

/// Malformed text input (cycle notation, group literals, sequence files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap (degree, index, factor order, search space) was hit.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation's precondition does not hold for the supplied arguments.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed structure failed its own consistency check.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace crownforge
