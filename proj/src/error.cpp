#include "rabidisp/error.hpp"

namespace rabidisp {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Config: return "ConfigError";
    case ErrorCode::NonPositiveSplitting: return "NonPositiveSplitting";
    case ErrorCode::NegativeFrequency: return "NegativeFrequency";
    case ErrorCode::ResonantDivergence: return "ResonantDivergence";
    case ErrorCode::AmbiguousLabeling: return "AmbiguousLabeling";
    case ErrorCode::DimensionOverflow: return "DimensionOverflow";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::NoBracket: return "NoBracket";
    case ErrorCode::DegenerateCurvature: return "DegenerateCurvature";
    case ErrorCode::NegativeRate: return "NegativeRate";
    case ErrorCode::NegativePhotonNumber: return "NegativePhotonNumber";
    case ErrorCode::StepUnderflow: return "StepUnderflow";
    case ErrorCode::DegenerateNullSpace: return "DegenerateNullSpace";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::Io: return "IoError";
  }
  return "Unknown";
}

}  // namespace rabidisp
