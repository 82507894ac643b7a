#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nqs {

enum class ErrorCode {
  InvalidShape,
  NotHermitian,
  NotUnitDiagonal,
  NotPositiveDefinite,
  OverlapOutOfRange,
  UnsupportedExponent,
  CholeskyFailure,
  IndexOutOfRange,
  SameIndex,
  UnsupportedDimension,
  NormViolation,
  InvalidDistribution,
  TraceViolation,
  NotPositiveSemidefinite,
  ComplexWeights,
  LengthMismatch,
  NotNormalizable,
  InvalidScale,
  RelationViolated,
  InvalidProbabilities,
  ParamOutOfRange,
  RangeError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every domain failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nqs
