#include "egqldpc/error.hpp"

namespace egqldpc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::ElementOutOfRange: return "ElementOutOfRange";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::InvalidGeometry: return "InvalidGeometry";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::RowCountMismatch: return "RowCountMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidClassIndex: return "InvalidClassIndex";
    case ErrorCode::UnsupportedGeometry: return "UnsupportedGeometry";
    case ErrorCode::NonpositiveDimension: return "NonpositiveDimension";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::MalformedAlist: return "MalformedAlist";
    case ErrorCode::MalformedMatrixMarket: return "MalformedMatrixMarket";
    case ErrorCode::MalformedConfig: return "MalformedConfig";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace egqldpc
