#pragma once

#include <stdexcept>
#include <string>

namespace tourforge {

// Base for every error thrown by the library. The CLI maps these to exit
// code 2 (malformed input / capacity), as opposed to exit 1 which means a
// well-formed check ran and the mathematical verdict was negative.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dimension mismatch (non-square input, incompatible operand shapes, ...).
struct ShapeError : Error {
  using Error::Error;
};

// Inverting or solving with a singular matrix.
struct SingularError : Error {
  using Error::Error;
};

// Pivot element outside {+1, -1}.
struct PivotError : Error {
  using Error::Error;
};

// Input exceeds a configured enumeration cap.
struct CapacityError : Error {
  using Error::Error;
};

// Unknown node/edge id, index out of range.
struct LookupError : Error {
  using Error::Error;
};

// Malformed file contents or malformed incidence column.
struct ParseError : Error {
  using Error::Error;
};

// Graph-structural precondition violated (e.g. edges do not form a triangle).
struct StructureError : Error {
  using Error::Error;
};

// Connecting-element configuration not recognized / not composable.
struct ClassifyError : Error {
  using Error::Error;
};

// Representation invariant violated (singular basis, bad certificate, ...).
struct RepresentationError : Error {
  using Error::Error;
};

// k-sum operand layout violation.
struct OperandError : Error {
  using Error::Error;
};

}  // namespace tourforge
