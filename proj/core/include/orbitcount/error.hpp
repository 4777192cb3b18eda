#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbitcount {

enum class ErrorCode {
  // graph construction
  NonPositiveLength,
  ProbabilitySumExceedsOne,
  IndexOutOfRange,
  MixedProbabilityAnnotation,
  MalformedInput,
  // spectral
  MissingProbabilities,
  NotIrreducible,
  NotPrimitive,
  DidNotConverge,
  NotStronglyConnected,
  BracketFailure,
  NotCritical,
  SingularDenominator,
  // asymptotics
  NonPositiveLambda,
  WrongMode,
  UnknownEdge,
  DomainError,
  // oracle
  BudgetOverflow,
  // applications
  VolumeNotConserved,
  PropertyViolated,
};

/// Broad failure classes; the CLI maps each to its own exit status.
enum class ErrorCategory { Validation, Numerical, Budget };

std::string_view to_string(ErrorCode code) noexcept;
ErrorCategory category_of(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return category_of(code_); }

 private:
  ErrorCode code_;
};

}  // namespace orbitcount
