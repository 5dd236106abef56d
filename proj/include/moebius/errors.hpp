#pragma once

#include <stdexcept>
#include <string>

namespace moebius {

// Error taxonomy. The CLI maps every subclass to exit code 2; an identity
// mismatch (which is a bug, not an error) is reported separately.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Resource limits: sieve limit of zero / above the memory cap, oracle guards.
struct CapacityError : Error {
  using Error::Error;
};

// Argument outside the constructed table (n > sieve limit and the like).
struct RangeError : Error {
  using Error::Error;
};

// Invalid parameter value (r < 2, unknown identity id, bad line number, ...).
struct ParameterError : Error {
  using Error::Error;
};

// A stated hypothesis of an identity is violated by the inputs.
struct PreconditionError : Error {
  using Error::Error;
};

// Division by zero and friends.
struct ArithmeticError : Error {
  using Error::Error;
};

// Value of the wrong kind, e.g. a non-integer weight where integers are required.
struct TypeError : Error {
  using Error::Error;
};

// An internal consistency check failed; signals an implementation bug.
struct InvariantError : Error {
  using Error::Error;
};

}  // namespace moebius
