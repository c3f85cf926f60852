#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace virtemp {

/// Every failure the library reports. The enumerator name is what the CLI
/// prints, so keep them stable.
enum class ErrorCode {
  TooFewLevels,
  NonIncreasingLevels,
  NonFiniteValue,
  NonPositiveProbability,
  NormalizationViolated,
  LengthMismatch,
  NonPositiveTemperature,
  EnergyOutOfRange,
  NotPassive,
  AlreadyPassive,
  IndexOutOfRange,
  AllDegenerate,
  NotSorted,
  EnergyAboveUniformMean,
  EquilibriumNoFlow,
  InvalidParams,
  NotHermitian,
  InvalidSpec,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace virtemp
