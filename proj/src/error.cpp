#include "virtemp/error.hpp"

namespace virtemp {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::TooFewLevels: return "TooFewLevels";
    case ErrorCode::NonIncreasingLevels: return "NonIncreasingLevels";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::NonPositiveProbability: return "NonPositiveProbability";
    case ErrorCode::NormalizationViolated: return "NormalizationViolated";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NonPositiveTemperature: return "NonPositiveTemperature";
    case ErrorCode::EnergyOutOfRange: return "EnergyOutOfRange";
    case ErrorCode::NotPassive: return "NotPassive";
    case ErrorCode::AlreadyPassive: return "AlreadyPassive";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::AllDegenerate: return "AllDegenerate";
    case ErrorCode::NotSorted: return "NotSorted";
    case ErrorCode::EnergyAboveUniformMean: return "EnergyAboveUniformMean";
    case ErrorCode::EquilibriumNoFlow: return "EquilibriumNoFlow";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace virtemp
