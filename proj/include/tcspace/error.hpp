#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tcspace {

enum class ErrorCode {
  ParseError,
  InvalidInput,
  NonSquare,
  NonSymmetric,
  NegativeDistance,
  ZeroDistanceDistinctPoints,
  TriangleViolation,
  NotZeroSum,
  NotImprovable,
  NullProblem,
  NotLipschitz,
  NotRealizable,
  PreconditionFailed,
  PeelNotApplicable,
  NotNormalized,
  NotATree,
  InstanceTooLarge,
  OracleMismatch,
};

std::string_view error_name(ErrorCode code);

/// Domain error raised by every module. `indices` carries the offending
/// point/edge indices when the error is about specific elements (for
/// example the (i, j, k) triple of a TriangleViolation).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<std::size_t> indices = {})
      : std::runtime_error(message), code_(code), indices_(std::move(indices)) {}

  ErrorCode code() const { return code_; }
  std::string_view name() const { return error_name(code_); }
  const std::vector<std::size_t>& indices() const { return indices_; }

 private:
  ErrorCode code_;
  std::vector<std::size_t> indices_;
};

}  // namespace tcspace
