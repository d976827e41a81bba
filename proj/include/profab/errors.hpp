#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace profab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (non-prime where a prime is expected,
/// dimension mismatch, unknown variable, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An ω-power over a prime outside P_π, i.e. an operation that is not in the
/// implicit signature attached to the ambient supernatural number.
class SignatureError : public InputError {
 public:
  using InputError::InputError;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Raised by the brute-force oracle when a search would exceed its size guard.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace profab
