#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mitlq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `position` is a byte offset into the parsed string.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at offset " + std::to_string(position) + ")"),
        message_(message),
        position_(position) {}

  const std::string& message() const { return message_; }
  std::size_t position() const { return position_; }

 private:
  std::string message_;
  std::size_t position_;
};

/// Trace document is malformed or violates an approximation invariant.
class TraceError : public Error {
 public:
  using Error::Error;
};

/// Formula cannot be evaluated against the given trace.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

}  // namespace mitlq
