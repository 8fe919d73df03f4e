#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dubrovnik {

// Malformed text input. Positions are 1-based; column is 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

// Structurally well-formed input that violates a domain invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Degree query on the zero polynomial.
class DegreeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exact division left a remainder.
class DivisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace dubrovnik
