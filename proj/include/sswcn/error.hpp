#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sswcn {

enum class ErrorKind {
  InvalidDimension,
  InvalidDirection,
  InvalidEndpoint,
  OutOfBox,
  InvalidPath,
  InvalidState,
  InvalidArgument,
  TooLarge,
  InvalidTableau,
  OutOfRange,
  Parse,
  Gap,
  Unavailable,
  Fetch,
  NoOverlap,
  Uncomputable,
  FormulaViolation,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidDimension: return "invalid-dimension";
    case ErrorKind::InvalidDirection: return "invalid-direction";
    case ErrorKind::InvalidEndpoint: return "invalid-endpoint";
    case ErrorKind::OutOfBox: return "out-of-box";
    case ErrorKind::InvalidPath: return "invalid-path";
    case ErrorKind::InvalidState: return "invalid-state";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::TooLarge: return "too-large";
    case ErrorKind::InvalidTableau: return "invalid-tableau";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Gap: return "gap";
    case ErrorKind::Unavailable: return "unavailable";
    case ErrorKind::Fetch: return "fetch";
    case ErrorKind::NoOverlap: return "no-overlap";
    case ErrorKind::Uncomputable: return "uncomputable";
    case ErrorKind::FormulaViolation: return "formula-violation";
  }
  return "unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sswcn
