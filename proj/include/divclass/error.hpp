#pragma once

#include <stdexcept>
#include <string>

namespace divclass {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input supplied by the caller.
class InputError : public Error {
 public:
  using Error::Error;
};

// A search exceeded its configured budget (e.g. maximal-chain enumeration).
class LimitExceeded : public InputError {
 public:
  using InputError::InputError;
};

// An internal consistency check failed. Always a bug, never bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace divclass
