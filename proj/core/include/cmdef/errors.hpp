#pragma once

#include <stdexcept>
#include <string>

namespace cmdef {

// Base of every error the toolkit throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different polynomial rings (different p or variable count).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

// Bad user input: unknown names, malformed text, inconsistent parameters.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A configured resource cap (basis size, degree, unknown count) was hit.
// Computations never truncate silently; they throw this instead.
class ResourceCapExceeded : public Error {
 public:
  explicit ResourceCapExceeded(const std::string& what)
      : Error("desk-scale exceeded: " + what) {}
};

// A symbolic identity that must hold by construction failed.
class VerificationFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace cmdef
