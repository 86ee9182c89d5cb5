#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idim {

/// Base class for every error raised by the library. The message is the
/// user-facing diagnostic (e.g. "self-loop", "edge not in graph").
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, 0 when no line applies.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Raised when enumerating all maximum packings would exceed the configured cap.
class WitnessCapExceeded : public Error {
 public:
  explicit WitnessCapExceeded(std::size_t cap)
      : Error("witness cap exceeded (" + std::to_string(cap) + ")"), cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

}  // namespace idim
