#pragma once

#include <stdexcept>
#include <string>

namespace sepball {

/// Base class for every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes or tensor factorizations do not line up.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A numeric precondition (range, premise of a bound, normalization) failed.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Materializing the requested matrix would exceed kMaterializationCap, or a
/// scan ran off its configured end.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace sepball
