#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tracelab {

enum class ErrorKind {
  DimensionMismatch,
  ParseError,
  NotArtinian,
  DimensionCapExceeded,
  ResidueFieldMismatch,
  AlgebraMismatch,
  NotSubmodule,
  FieldNotFinite,
  EnumerationCapExceeded,
  ExtNotVanishing,
  NotCoFinite,
  EmptyGenerators,
  IdealNotIntegral,
  InvalidArgument,
  Internal,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotArtinian: return "NotArtinian";
    case ErrorKind::DimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorKind::ResidueFieldMismatch: return "ResidueFieldMismatch";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotSubmodule: return "NotSubmodule";
    case ErrorKind::FieldNotFinite: return "FieldNotFinite";
    case ErrorKind::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorKind::ExtNotVanishing: return "ExtNotVanishing";
    case ErrorKind::NotCoFinite: return "NotCoFinite";
    case ErrorKind::EmptyGenerators: return "EmptyGenerators";
    case ErrorKind::IdealNotIntegral: return "IdealNotIntegral";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

/// Every failure raised by the library. `line`/`column` are 1-based and only
/// meaningful for ParseError (0 means unknown).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::size_t line = 0,
        std::size_t column = 0)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        line_(line),
        column_(column) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  ErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
};

/// Internal consistency assertion; a violation is a bug, not bad input.
inline void ensure(bool condition, const char* what) {
  if (!condition) throw Error(ErrorKind::Internal, what);
}

}  // namespace tracelab
