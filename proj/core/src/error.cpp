#include "tropical/error.hpp"

namespace tropical {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByBottom: return "DivisionByBottom";
    case ErrorCode::BottomPower: return "BottomPower";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotEntire: return "NotEntire";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::PermutationEngineTooLarge: return "PermutationEngineTooLarge";
    case ErrorCode::TooManyFunctions: return "TooManyFunctions";
    case ErrorCode::InvalidCertificate: return "InvalidCertificate";
    case ErrorCode::NotInSpan: return "NotInSpan";
    case ErrorCode::CommonRoot: return "CommonRoot";
    case ErrorCode::BadCoefficients: return "BadCoefficients";
    case ErrorCode::EmptyColumn: return "EmptyColumn";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::ConditionViolated: return "ConditionViolated";
    case ErrorCode::ConstantFunction: return "ConstantFunction";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonLinearTerm: return "NonLinearTerm";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

}  // namespace tropical
