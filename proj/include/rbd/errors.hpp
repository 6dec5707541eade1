#pragma once

#include <stdexcept>
#include <string>

namespace rbd {

// Malformed design text. line() is 1-based, 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

// A design failed its structural invariants.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// The information matrix has more than one zero eigenvalue.
class DisconnectedError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Parameters do not fit the operation (wrong v, k, r or an out-of-range family index).
class ShapeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace rbd
