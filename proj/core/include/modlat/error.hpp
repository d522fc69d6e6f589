#pragma once

#include <stdexcept>
#include <string>

namespace modlat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates an algebraic axiom or a documented precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured size cap (elements, lattice nodes, homomorphisms) would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagreed. Always a bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace modlat
