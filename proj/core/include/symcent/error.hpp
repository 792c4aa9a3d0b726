#pragma once

#include <stdexcept>
#include <string>

namespace symcent {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller-supplied input violates a precondition (bad spec, cap exceeded,
/// intransitive action where transitivity is required, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed. `position` is a 0-based offset into the
/// offending string.
class ParseError : public PreconditionError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : PreconditionError(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A self-check of a computed object failed. Always an implementation bug.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace symcent
