#pragma once

#include <stdexcept>
#include <string>

namespace orchard {

/// A geometric precondition failed (degenerate join, singular transform,
/// point off its curve, ...). These are caller errors.
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed. The message names the invariant.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& invariant)
      : std::logic_error("invariant violated: " + invariant) {}
};

}  // namespace orchard
