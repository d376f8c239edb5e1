#pragma once

#include <stdexcept>
#include <string>

namespace rabidisp {

enum class ErrorCode {
  InvalidArgument,
  Config,
  NonPositiveSplitting,
  NegativeFrequency,
  ResonantDivergence,
  AmbiguousLabeling,
  DimensionOverflow,
  DimensionMismatch,
  ConvergenceFailure,
  NoBracket,
  DegenerateCurvature,
  NegativeRate,
  NegativePhotonNumber,
  StepUnderflow,
  DegenerateNullSpace,
  TruncationTooSmall,
  Io,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a perturbative denominator vanishes; `level` is the offending
/// qubit transition index.
class ResonanceError : public Error {
 public:
  ResonanceError(int level, const std::string& what)
      : Error(ErrorCode::ResonantDivergence, what), level_(level) {}

  int level() const noexcept { return level_; }

 private:
  int level_;
};

}  // namespace rabidisp
