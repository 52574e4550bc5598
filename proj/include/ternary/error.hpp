#pragma once

#include <stdexcept>
#include <string>

namespace ternary {

/// Malformed input: bad file grammar, out-of-range element, mismatched dimensions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on an object that does not satisfy its precondition
/// (e.g. a Gluskin-Hosszu decomposition of something that is not a ternary group).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive search would exceed its configured enumeration bound.
class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction failed its own verification. Always a bug.
class DefectError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ternary
