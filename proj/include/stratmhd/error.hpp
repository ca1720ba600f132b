#pragma once

#include <stdexcept>
#include <string>

namespace stratmhd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument or inconsistent shapes passed to an operation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Invalid experiment configuration (parameter ranges, unreadable files).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Non-finite values or a CFL breach during time integration.
class NumericalAbort : public Error {
 public:
  using Error::Error;
};

/// A hypothesis of the stability theory failed at runtime (smallness,
/// weight positivity).
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace stratmhd
