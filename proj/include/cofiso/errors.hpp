#ifndef COFISO_ERRORS_HPP
#define COFISO_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cofiso {

// Base of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mixed dimensions, or a dimension the theory excludes (n < 2).
struct DimensionError : Error {
  using Error::Error;
};

// Value outside the supported range (permutation degree caps, box sizes, ...).
struct RangeError : Error {
  using Error::Error;
};

struct NotIdempotentError : Error {
  using Error::Error;
};

struct NotMaximalError : Error {
  using Error::Error;
};

struct ExcludedSetOutsideBox : Error {
  using Error::Error;
};

// The window map is distance preserving at most, but is not the restriction
// of a coordinate permutation.
struct NotCoordinatePermutation : Error {
  using Error::Error;
};

struct EmptyDomain : Error {
  using Error::Error;
};

struct TooCloseToUpperBoundary : Error {
  using Error::Error;
};

struct SliceTooLarge : Error {
  using Error::Error;
};

// Grammar violation; `column` is the 1-based position of the offending input.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t column)
      : Error(what + " at column " + std::to_string(column)), column(column) {}

  std::size_t column;
};

}  // namespace cofiso

#endif  // COFISO_ERRORS_HPP
