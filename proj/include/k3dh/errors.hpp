#pragma once

#include <stdexcept>
#include <string>

namespace k3dh {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shapes of operands do not fit the operation.
struct DimensionError : Error {
  using Error::Error;
};

/// Vectors from two different lattices were combined.
struct LatticeMismatch : Error {
  using Error::Error;
};

/// A bilinear form that was required to be nondegenerate has a kernel.
struct DegenerateForm : Error {
  using Error::Error;
};

struct IndefiniteForm : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

/// A bounded construction could not produce a verified result.
struct NotFound : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace k3dh
