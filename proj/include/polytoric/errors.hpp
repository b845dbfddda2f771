#pragma once

#include <stdexcept>
#include <string>

namespace polytoric {

/// Raised when a point set spans no 2-dimensional region.
class DegenerateInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonpositiveScale : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonPrimitiveDirection : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BoxTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed rational literal or polygon document. `line`/`column` are
/// 1-based and 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal cross-check failed. Always indicates a bug, never bad input.
class VerificationError : public std::logic_error {
 public:
  enum class Kind { VertexMismatch, WidthMismatch, ChainBroken };

  VerificationError(Kind kind, const std::string& what)
      : std::logic_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace polytoric
