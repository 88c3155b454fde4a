#pragma once

#include <stdexcept>
#include <string>

namespace cleanring {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tables are malformed (wrong shape, out-of-range entries, zero not at index 0).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A ring or bimodule axiom does not hold.
class AxiomError : public Error {
 public:
  using Error::Error;
};

/// A construction or enumeration would exceed a configured size cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Operation is not defined for the given input (non-commutative ring, bad denominator, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace cleanring
