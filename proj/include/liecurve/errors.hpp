#pragma once

#include <stdexcept>
#include <string>

namespace liecurve {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

/// Plane basis is not orthonormal, or the spanning vectors are parallel.
struct DegeneratePlane : Error {
  using Error::Error;
};

struct NonSymmetric : Error {
  using Error::Error;
};

struct InvalidDimension : Error {
  using Error::Error;
};

struct InvalidTheta : Error {
  using Error::Error;
};

/// Vector has a normal component beyond tolerance.
struct NotTangent : Error {
  using Error::Error;
};

struct NotEinstein : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace liecurve
