#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lich {

enum class ErrorKind {
  DivisionByZero,
  MixedModes,
  SyntaxError,
  UndeclaredParameter,
  BasisMismatch,
  DegreeMismatch,
  OmegaNotClosed,
  ParamModeUnsupported,
  NotClosed,
  OddDimension,
  Degenerate,
  NoSolution,
  LeeNotClosed,
  NotAutomorphism,
  ZeroForm,
  InvalidParams,
  InvalidInput,
  StructuralFailure,
};

std::string_view to_string(ErrorKind kind);

// Errors that map onto the CLI's "input error" exit code; everything else is
// a mathematical failure.
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failure with a 1-based line/column (line 0 means "single-line input").
// kind is SyntaxError or UndeclaredParameter.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string& message, std::size_t line,
             std::size_t column)
      : Error(kind, locate(message, line, column)),
        detail_(message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  static std::string locate(const std::string& message, std::size_t line,
                            std::size_t column);

  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lich
