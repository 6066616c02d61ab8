#pragma once

#include <stdexcept>
#include <string>

namespace spantree {

/// Malformed textual input (edge lists, partitions, CLI arguments).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive routine was asked to work beyond its configured size guard.
class CapabilityExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A division that must be exact left a remainder, or a structural assertion
/// that the theory guarantees failed. Always indicates invalid input that
/// slipped past a precondition, or a bug.
class ExactnessError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace spantree
