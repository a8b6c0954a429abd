#pragma once

#include <stdexcept>
#include <string>

namespace schurkit {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed input text. Line and column are 1-based.
class ParseError : public Error {
  public:
    ParseError(const std::string& msg, int line, int column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

// Input that parses but violates a structural precondition.
class ValidationError : public Error {
  public:
    using Error::Error;
};

// A file that cannot be opened or read.
class IoError : public Error {
  public:
    using Error::Error;
};

// A computation that would exceed its configured budget or size envelope.
class ResourceError : public Error {
  public:
    using Error::Error;
};

// A violated internal invariant; always a bug.
class InternalError : public Error {
  public:
    using Error::Error;
};

}  // namespace schurkit
