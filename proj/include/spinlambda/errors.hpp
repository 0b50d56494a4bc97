#pragma once

#include <stdexcept>

namespace spinlambda {

/// Root-system pair data violates a structural invariant.
struct DatumError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An enumeration exceeded its configured cap.
struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A datum file or document is syntactically malformed. Distinct from
/// DatumError: the text could not even be read as pair data.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two independent computations that must agree did not.
/// Signals a bug in the library, never a property of the input.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace spinlambda
