#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rotsurf {

enum class ErrorCode {
  DivisionNearZero,
  SqrtDomain,
  OrderTooHigh,
  DomainExcluded,
  DegenerateMetric,
  ParabolicPoint,
  SingularDenominator,
  NegativeRadicand,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionNearZero: return "division near zero";
    case ErrorCode::SqrtDomain: return "sqrt domain";
    case ErrorCode::OrderTooHigh: return "order too high";
    case ErrorCode::DomainExcluded: return "excluded band";
    case ErrorCode::DegenerateMetric: return "degenerate metric";
    case ErrorCode::ParabolicPoint: return "parabolic point";
    case ErrorCode::SingularDenominator: return "singular denominator";
    case ErrorCode::NegativeRadicand: return "negative radicand";
  }
  return "unknown";
}

/// Thrown by every numerical routine that cannot produce a meaningful value.
/// The code lets callers (the audit harness, the CLI) classify the failure
/// without parsing messages.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rotsurf
