#pragma once

#include <stdexcept>
#include <string>

namespace ldlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent arguments (dimension mismatch, symbol out of range, ...).
class ParameterError : public Error {
  public:
    using Error::Error;
};

/// A search or enumeration would exceed its configured budget. Never a verdict.
class BudgetExceeded : public Error {
  public:
    using Error::Error;
};

/// An operation's documented precondition does not hold for the given input.
class PreconditionError : public Error {
  public:
    using Error::Error;
};

/// A hypothesis of a refutation construction fails; the message names the inequality.
class HypothesisFailure : public Error {
  public:
    using Error::Error;
};

}  // namespace ldlab
