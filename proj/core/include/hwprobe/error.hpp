#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hwprobe {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: inhomogeneous generators, ring mismatch,
/// unknown names.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column,
             std::string token)
      : InputError(message + " at " + std::to_string(line) + ":" +
                   std::to_string(column) +
                   (token.empty() ? std::string() : " near '" + token + "'")),
        line_(line),
        column_(column),
        token_(std::move(token)) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& token() const { return token_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

/// A mathematical precondition of an operation does not hold (module not
/// MCM, ring not a domain, free module where a nonfree one is required...).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// A Groebner computation needed S-pairs beyond the configured degree bound.
class DegreeBoundExceeded : public Error {
 public:
  explicit DegreeBoundExceeded(int bound)
      : Error("degree bound " + std::to_string(bound) + " exceeded"),
        bound_(bound) {}
  int bound() const { return bound_; }

 private:
  int bound_;
};

/// An internal consistency check failed. Always a bug, never a legal state.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hwprobe
