#pragma once

#include <stdexcept>
#include <string>

namespace dessins {

// Bad caller input: malformed text, degree mismatch, precondition violated.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured resource cap (enumeration, lattice, degree, search budget)
// would be exceeded. Callers are expected to fall back to a cheaper path or
// report the condition; nothing is ever silently truncated.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed. This always signals a bug or corrupt
// input data and is never returned as an ordinary result.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dessins
