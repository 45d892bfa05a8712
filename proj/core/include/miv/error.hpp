#pragma once

#include <stdexcept>
#include <string>

namespace miv {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (instance files, order lists, rationals).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Vectors or matrices whose sizes do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value violates a type invariant (unit sums, zero-weight topics, ...).
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search would exceed its configured size cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, long long cap, long long requested)
      : Error(what + " (cap " + std::to_string(cap) + ", requested " + std::to_string(requested) + ")"),
        cap_(cap),
        requested_(requested) {}

  long long cap() const noexcept { return cap_; }
  long long requested() const noexcept { return requested_; }

 private:
  long long cap_;
  long long requested_;
};

/// Exact integer scaling of rational weights would overflow the configured bound.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

}  // namespace miv
