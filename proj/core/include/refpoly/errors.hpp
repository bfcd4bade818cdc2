#pragma once

#include <stdexcept>
#include <string>

namespace refpoly {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad edge lists, graph6 lines, invalid vertex sets.
class InputError : public Error {
 public:
  using Error::Error;
};

// A configured size bound was exceeded (vertex cap, 64-bit coordinate range).
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Polytope is not full-dimensional, or ambient dimensions disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Internal cross-check failed; indicates a bug rather than bad input.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace refpoly
