#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace smeared {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position()` is the 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (unit ideal, empty variable set, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotMember : public Error {
 public:
  using Error::Error;
};

/// A mathematical hypothesis of the requested construction does not hold.
class HypothesisFailure : public Error {
 public:
  using Error::Error;
};

/// A certificate produced by the engine failed its own re-check. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace smeared
