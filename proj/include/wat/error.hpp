#pragma once

#include <stdexcept>
#include <string>

namespace wat {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: bad files, undeclared symbols, out-of-range ids.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A configured size cap (determinization, enumeration, iteration) was hit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an argument violating its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace wat
