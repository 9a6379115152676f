#include "lich/error.hpp"

namespace lich {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::MixedModes: return "MixedModes";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UndeclaredParameter: return "UndeclaredParameter";
    case ErrorKind::BasisMismatch: return "BasisMismatch";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::OmegaNotClosed: return "OmegaNotClosed";
    case ErrorKind::ParamModeUnsupported: return "ParamModeUnsupported";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::OddDimension: return "OddDimension";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::LeeNotClosed: return "LeeNotClosed";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::ZeroForm: return "ZeroForm";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::StructuralFailure: return "StructuralFailure";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UndeclaredParameter:
    case ErrorKind::InvalidParams:
    case ErrorKind::InvalidInput:
    case ErrorKind::MixedModes:
    case ErrorKind::BasisMismatch:
    case ErrorKind::DegreeMismatch:
    case ErrorKind::ParamModeUnsupported:
    case ErrorKind::DivisionByZero:
      return true;
    default:
      return false;
  }
}

std::string ParseError::locate(const std::string& message, std::size_t line,
                               std::size_t column) {
  if (line == 0) return "column " + std::to_string(column) + ": " + message;
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
}

}  // namespace lich
