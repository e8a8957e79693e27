#pragma once

#include <stdexcept>
#include <string>

namespace ehrhart {

// Base class for all errors raised by the library. The CLI maps these to
// exit code 2 (unmet mathematical precondition), except ScanLimitExceeded
// which maps to exit code 4.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};
struct EmptyInput : Error {
  using Error::Error;
};
struct DependentGenerators : Error {
  using Error::Error;
};
struct OriginNotInterior : Error {
  using Error::Error;
};
struct EvenIndex : Error {
  using Error::Error;
};
struct NonIntegralGenerator : Error {
  using Error::Error;
};
struct FaceNotInTriangulation : Error {
  using Error::Error;
};
struct PointOutsideCone : Error {
  using Error::Error;
};
struct InvalidDenominatorOverride : Error {
  using Error::Error;
};
struct RayNotInterior : Error {
  using Error::Error;
};
struct InexactDivision : Error {
  using Error::Error;
};
struct ScanLimitExceeded : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace ehrhart
