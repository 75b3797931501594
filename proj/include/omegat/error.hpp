#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace omegat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression or generator text. `position` is a 0-based offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Malformed serialized input (automaton or witness JSON).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition (e.g. a non-simple CCA
/// passed where a simple one is required).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A result failed its own self-check. Always a bug, never a valid outcome.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace omegat
