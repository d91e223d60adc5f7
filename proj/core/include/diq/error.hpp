#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diq {

/// Base of every exception thrown by the kernel.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial or ideal text. `position()` is a 0-based offset
/// into the offending line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operands live in different rings.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (zero divisor ideal,
/// dependent variable set, I not contained in P, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A bounded search (regular-sequence sampling, the LPA m-loop) ran out
/// of attempts.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace diq
