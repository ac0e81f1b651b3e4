#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace birdtrack {

enum class ErrorCode {
  DivisionByZero,
  UnsupportedRadicalDivision,
  ZeroRadicand,
  NegativeRadicand,
  PoleAtN,
  SignatureMismatch,
  MixedRoleTensor,
  OrientationViolation,
  InvalidPermutation,
  OutOfRange,
  NotProportional,
  UnsupportedK,
  InvalidDecomposition,
  InvalidShape,
  InvalidTableau,
  BadBlockSize,
  RadicalComparisonUnsupported,
  DimensionMismatch,
  DimensionTooLarge,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::UnsupportedRadicalDivision: return "UnsupportedRadicalDivision";
    case ErrorCode::ZeroRadicand: return "ZeroRadicand";
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::PoleAtN: return "PoleAtN";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::MixedRoleTensor: return "MixedRoleTensor";
    case ErrorCode::OrientationViolation: return "OrientationViolation";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotProportional: return "NotProportional";
    case ErrorCode::UnsupportedK: return "UnsupportedK";
    case ErrorCode::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorCode::InvalidShape: return "InvalidShape";
    case ErrorCode::InvalidTableau: return "InvalidTableau";
    case ErrorCode::BadBlockSize: return "BadBlockSize";
    case ErrorCode::RadicalComparisonUnsupported: return "RadicalComparisonUnsupported";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace birdtrack
