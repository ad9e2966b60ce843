#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace loopring {

enum class ErrorKind {
  malformed,
  not_latin,
  no_identity,
  order_too_large,
  order_exceeds_cap,
  length_mismatch,
  not_bol,
  not_srar,
  parse_error,
  validation_error,
  duplicate_name,
  unsupported_format,
  theorem_violation,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::malformed: return "Malformed";
    case ErrorKind::not_latin: return "NotLatin";
    case ErrorKind::no_identity: return "NoIdentity";
    case ErrorKind::order_too_large: return "OrderTooLarge";
    case ErrorKind::order_exceeds_cap: return "OrderExceedsCap";
    case ErrorKind::length_mismatch: return "LengthMismatch";
    case ErrorKind::not_bol: return "NotBol";
    case ErrorKind::not_srar: return "NotSrar";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::validation_error: return "ValidationError";
    case ErrorKind::duplicate_name: return "DuplicateName";
    case ErrorKind::unsupported_format: return "UnsupportedFormat";
    case ErrorKind::theorem_violation: return "TheoremViolation";
  }
  return "Unknown";
}

/// Every failure raised by the library. `kind()` is the machine-readable
/// category; `what()` carries "<Kind>: <detail>".
class LoopError : public std::runtime_error {
 public:
  LoopError(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

/// A proved statement failed on concrete data. At desk scale this means a
/// bug in the library, never bad input.
class TheoremViolation : public LoopError {
 public:
  explicit TheoremViolation(const std::string& detail)
      : LoopError(ErrorKind::theorem_violation, detail) {}
};

}  // namespace loopring
