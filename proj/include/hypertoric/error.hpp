#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypertoric {

enum class ErrorCode {
  NotUnimodular,
  NotSurjective,
  ZeroBRow,
  RankDeficient,
  NonUnitRatio,
  GroundTooLarge,
  OracleBoundExceeded,
  NoIntegralSolution,
  IndexOutOfRange,
  ShapeMismatch,
  BadParams,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Domain error raised by every module. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hypertoric
