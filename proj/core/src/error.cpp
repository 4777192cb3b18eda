#include "orbitcount/error.hpp"

namespace orbitcount {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPositiveLength: return "NonPositiveLength";
    case ErrorCode::ProbabilitySumExceedsOne: return "ProbabilitySumExceedsOne";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::MixedProbabilityAnnotation: return "MixedProbabilityAnnotation";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::MissingProbabilities: return "MissingProbabilities";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::DidNotConverge: return "DidNotConverge";
    case ErrorCode::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorCode::BracketFailure: return "BracketFailure";
    case ErrorCode::NotCritical: return "NotCritical";
    case ErrorCode::SingularDenominator: return "SingularDenominator";
    case ErrorCode::NonPositiveLambda: return "NonPositiveLambda";
    case ErrorCode::WrongMode: return "WrongMode";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::BudgetOverflow: return "BudgetOverflow";
    case ErrorCode::VolumeNotConserved: return "VolumeNotConserved";
    case ErrorCode::PropertyViolated: return "PropertyViolated";
  }
  return "Unknown";
}

ErrorCategory category_of(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotIrreducible:
    case ErrorCode::NotPrimitive:
    case ErrorCode::DidNotConverge:
    case ErrorCode::BracketFailure:
    case ErrorCode::NotCritical:
    case ErrorCode::SingularDenominator:
    case ErrorCode::PropertyViolated:
      return ErrorCategory::Numerical;
    case ErrorCode::BudgetOverflow:
      return ErrorCategory::Budget;
    default:
      return ErrorCategory::Validation;
  }
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace orbitcount
