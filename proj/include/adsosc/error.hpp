#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace adsosc {

enum class ErrorCode {
  InvalidArgument,
  DomainViolation,
  NegativeDiscriminant,
  LambdaZero,
  ImaginaryEnergy,
  ImaginaryFrequency,
  SeriesDivergence,
  ConvergenceFailure,
  QuadratureFailure,
  TailDivergence,
  BeyondCritical,
  CriticalSingularity,
  NoCriticalPoint,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Raised by every numeric routine in the library. The message carries the
/// offending values so callers (and the CLI) can surface it verbatim.
class NumericError : public std::runtime_error {
 public:
  NumericError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace adsosc
