#pragma once

#include <stdexcept>
#include <string>

namespace ssbc {

// Base for every error raised by the library. The CLI maps the subclasses
// onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid argument value (k = 0, ell < 2, epsilon out of range, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Malformed or unusable input data (non-finite values, bad CSV cells, ...).
class DataError : public Error {
 public:
  using Error::Error;
};

// Decomposition failed to converge or produced an unusable result.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// A dense O(n^2) computation was refused because n exceeds its size guard.
class GuardError : public Error {
 public:
  using Error::Error;
};

namespace detail {

[[noreturn]] inline void throw_dimension(const char* what, long expected, long actual) {
  throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(expected) +
                       ", got " + std::to_string(actual));
}

}  // namespace detail

}  // namespace ssbc
