#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace commdetect {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input. line() is 1-based; 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that violates a precondition or domain invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace commdetect
