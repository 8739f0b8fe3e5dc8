#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fht {

enum class ErrorCode {
  InvalidArgument,
  NonFiniteSample,
  DegenerateGrid,
  DegenerateSet,
  NoConvergence,
  SingularEvaluation,
  UnsupportedExponents,
  ExponentOutOfRange,
  NotSolvable,
  BranchViolation,
  OutsideEigenvalueSet,
  UnsupportedDescriptor,
  InconsistentClassification,
  ParseError,
  IoError,
};

[[nodiscard]] constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonFiniteSample: return "NonFiniteSample";
    case ErrorCode::DegenerateGrid: return "DegenerateGrid";
    case ErrorCode::DegenerateSet: return "DegenerateSet";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::SingularEvaluation: return "SingularEvaluation";
    case ErrorCode::UnsupportedExponents: return "UnsupportedExponents";
    case ErrorCode::ExponentOutOfRange: return "ExponentOutOfRange";
    case ErrorCode::NotSolvable: return "NotSolvable";
    case ErrorCode::BranchViolation: return "BranchViolation";
    case ErrorCode::OutsideEigenvalueSet: return "OutsideEigenvalueSet";
    case ErrorCode::UnsupportedDescriptor: return "UnsupportedDescriptor";
    case ErrorCode::InconsistentClassification: return "InconsistentClassification";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the toolkit. The code drives CLI exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the high-regime solver; carries the measured solvability residual.
class NotSolvableError : public Error {
 public:
  NotSolvableError(double residual, const std::string& what)
      : Error(ErrorCode::NotSolvable, what), residual_(residual) {}

  [[nodiscard]] double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace fht
