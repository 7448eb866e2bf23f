#pragma once

#include <stdexcept>
#include <string>

namespace dcq {

/// Base class for every recoverable error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text: bad JSON, bad decimal strings, truncated table files.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates an instance invariant (duplicate ids,
/// nonpositive radii, centers off their plane, general position...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The estimated number of guesses exceeds the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace dcq
