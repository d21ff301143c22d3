#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edd {

/// Arithmetic failure inside a ring: division by zero, inexact division,
/// inverting a non-unit.
class RingError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Incompatible matrix shapes or out-of-range indices.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition of an operation does not hold (singular
/// block, missing coprimeness, enumeration guard exceeded, ...).
class HypothesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed entry expression or matrix document.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)),
        message_(what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }
  /// The message without the offset.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t offset_;
};

/// Unreadable input, malformed document or bad command-line usage.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace edd
