#pragma once

#include <stdexcept>
#include <string>

namespace leray {

// Base for every error raised by the library. The exit_code() mapping is
// what the command-line tool returns.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept = 0;
};

// Malformed input: parse errors, out-of-range parameters, ambient mismatch.
class InputError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 1; }
};

// The caller violated a theorem hypothesis (e.g. M is not contained in X).
class HypothesisViolation : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
};

// Something that is guaranteed mathematically did not happen. Always a bug
// in this library or a refutation of the statement being checked.
class InternalError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

}  // namespace leray
