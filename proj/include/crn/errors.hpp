#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crn {

class CrnError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised while reading reaction text. line() is 1-based, 0 when the error
// is not tied to a particular line.
class ParseError : public CrnError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : CrnError(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

class SelfLoopError : public ParseError {
 public:
  using ParseError::ParseError;
};

class DuplicateReactionError : public ParseError {
 public:
  using ParseError::ParseError;
};

class DuplicateLabelError : public ParseError {
 public:
  using ParseError::ParseError;
};

class EmptyNetworkError : public ParseError {
 public:
  explicit EmptyNetworkError(const std::string& what) : ParseError(what, 0) {}
};

class NotInSpanError : public CrnError {
 public:
  using CrnError::CrnError;
};

class PartitionError : public CrnError {
 public:
  using CrnError::CrnError;
};

class MismatchedReactionSetError : public CrnError {
 public:
  using CrnError::CrnError;
};

class TooLargeError : public CrnError {
 public:
  using CrnError::CrnError;
};

class EmptySubsetError : public CrnError {
 public:
  using CrnError::CrnError;
};

class DimensionError : public CrnError {
 public:
  using CrnError::CrnError;
};

class NonPositivePointError : public CrnError {
 public:
  using CrnError::CrnError;
};

// A postcondition guaranteed by construction failed to hold.
class InternalError : public CrnError {
 public:
  using CrnError::CrnError;
};

}  // namespace crn
