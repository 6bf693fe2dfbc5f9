#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grammalc {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression or grammar text. `position` is a 0-based offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownLetter : public Error {
 public:
  using Error::Error;
};

class AlphabetMismatch : public Error {
 public:
  AlphabetMismatch() : Error("operands live over different alphabets") {}
};

/// Substitution would leave the integer Laurent ring.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// D^n(a) produced a monomial outside the shape required for Q-extraction.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A negative power of a non-monomial linear factor survived cancellation.
class CancellationError : public Error {
 public:
  using Error::Error;
};

class SchemeMismatch : public Error {
 public:
  using Error::Error;
};

class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace grammalc
