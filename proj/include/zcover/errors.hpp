#pragma once

#include <stdexcept>
#include <string>

namespace zcover {

// Operands come from different groups (or character groups of different rank).
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation was not met.
struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

// Building data that is internally inconsistent (unknown labels, failed
// residual relations, odd Euler characteristic terms, ...).
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed building-data file.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Curve oracle misuse: bad curve, prime out of range, generator image of the
// wrong order.
struct OracleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace zcover
