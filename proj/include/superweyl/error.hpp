#pragma once

#include <stdexcept>
#include <string>

namespace superweyl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (algebra names, weights, root strings).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation does not hold for the given input.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A brute-force verification that is expected to succeed did not.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace superweyl
