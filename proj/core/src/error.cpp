#include "atrig/error.hpp"

namespace atrig {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyCoefficients: return "EmptyCoefficients";
    case ErrorCode::NonFiniteCoefficient: return "NonFiniteCoefficient";
    case ErrorCode::InvalidKind: return "InvalidKind";
    case ErrorCode::InvalidDegree: return "InvalidDegree";
    case ErrorCode::PresentationMismatch: return "PresentationMismatch";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NonSemisimple: return "NonSemisimple";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::InvalidPower: return "InvalidPower";
    case ErrorCode::UnsupportedAlgebra: return "UnsupportedAlgebra";
    case ErrorCode::NonPositivePythagorean: return "NonPositivePythagorean";
    case ErrorCode::OutsideLogDomain: return "OutsideLogDomain";
    case ErrorCode::NonRationalCoefficients: return "NonRationalCoefficients";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace atrig
