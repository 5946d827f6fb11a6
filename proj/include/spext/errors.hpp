#pragma once

#include <stdexcept>
#include <string>

namespace spext {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph data: self-loops, duplicate edges, endpoints out of range.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

/// A documented size limit was exceeded (canonical labeling, enumeration).
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an input that violates its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Edge-list text could not be parsed. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace spext
