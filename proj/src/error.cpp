#include "hypertoric/error.hpp"

namespace hypertoric {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::ZeroBRow: return "ZeroBRow";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NonUnitRatio: return "NonUnitRatio";
    case ErrorCode::GroundTooLarge: return "GroundTooLarge";
    case ErrorCode::OracleBoundExceeded: return "OracleBoundExceeded";
    case ErrorCode::NoIntegralSolution: return "NoIntegralSolution";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace hypertoric
