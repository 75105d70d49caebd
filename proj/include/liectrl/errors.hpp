#pragma once

#include <stdexcept>
#include <string>

namespace liectrl {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: bad strings, mismatched qubit counts, schema violations.
class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what) : Error(what) {}
};

/// A configured resource cap (dense size, qubit count, lattice bound) was hit.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what) : Error(what) {}
};

/// A numerical result contradicts a certified structural fact. Never resolved
/// silently; callers decide whether to retry with different tolerances.
class NumericalInconsistency : public Error {
 public:
  explicit NumericalInconsistency(const std::string& what) : Error(what) {}
};

}  // namespace liectrl
