#include <nqs/error.hpp>

namespace nqs {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidShape: return "InvalidShape";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotUnitDiagonal: return "NotUnitDiagonal";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::OverlapOutOfRange: return "OverlapOutOfRange";
    case ErrorCode::UnsupportedExponent: return "UnsupportedExponent";
    case ErrorCode::CholeskyFailure: return "CholeskyFailure";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SameIndex: return "SameIndex";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::NormViolation: return "NormViolation";
    case ErrorCode::InvalidDistribution: return "InvalidDistribution";
    case ErrorCode::TraceViolation: return "TraceViolation";
    case ErrorCode::NotPositiveSemidefinite: return "NotPositiveSemidefinite";
    case ErrorCode::ComplexWeights: return "ComplexWeights";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotNormalizable: return "NotNormalizable";
    case ErrorCode::InvalidScale: return "InvalidScale";
    case ErrorCode::RelationViolated: return "RelationViolated";
    case ErrorCode::InvalidProbabilities: return "InvalidProbabilities";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::RangeError: return "RangeError";
  }
  return "UnknownError";
}

}  // namespace nqs
