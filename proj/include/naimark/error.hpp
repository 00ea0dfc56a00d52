#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace naimark {

enum class ErrorCode {
  InvalidDimension,
  InvalidInput,
  IndexOutOfRange,
  CatalogMiss,
  InvalidCircuit,
  UnsupportedDimension,
  RankDeficientFrame,
  NumericalFailure,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidDimension:
      return "invalid-dimension";
    case ErrorCode::InvalidInput:
      return "invalid-input";
    case ErrorCode::IndexOutOfRange:
      return "index-out-of-range";
    case ErrorCode::CatalogMiss:
      return "catalog-miss";
    case ErrorCode::InvalidCircuit:
      return "invalid-circuit";
    case ErrorCode::UnsupportedDimension:
      return "unsupported-dimension";
    case ErrorCode::RankDeficientFrame:
      return "rank-deficient-frame";
    case ErrorCode::NumericalFailure:
      return "numerical-failure";
    case ErrorCode::ParseError:
      return "parse-error";
  }
  return "unknown";
}

}  // namespace naimark
