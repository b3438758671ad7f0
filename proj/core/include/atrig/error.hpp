#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace atrig {

/// Stable failure categories. The textual names returned by `to_string` are
/// part of the CLI contract and must not change.
enum class ErrorCode {
  EmptyCoefficients,
  NonFiniteCoefficient,
  InvalidKind,
  InvalidDegree,
  PresentationMismatch,
  NotAUnit,
  NonSemisimple,
  NoConvergence,
  ShapeMismatch,
  IllConditioned,
  InvalidPower,
  UnsupportedAlgebra,
  NonPositivePythagorean,
  OutsideLogDomain,
  NonRationalCoefficients,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace atrig
