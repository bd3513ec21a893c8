#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace egqldpc {

enum class ErrorCode {
  NotPrime,
  NotPrimePower,
  DegreeOutOfRange,
  ElementOutOfRange,
  ZeroInverse,
  InvalidGeometry,
  CoincidentPoints,
  InvalidDimension,
  RowCountMismatch,
  DimensionMismatch,
  BudgetExceeded,
  InvalidClassIndex,
  UnsupportedGeometry,
  NonpositiveDimension,
  CapExceeded,
  MalformedAlist,
  MalformedMatrixMarket,
  MalformedConfig,
};

std::string_view to_string(ErrorCode code);

// Every library failure is reported through this type. what() carries the
// detail, code() the stable machine-readable name.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const { return to_string(code_); }

 private:
  ErrorCode code_;
};

}  // namespace egqldpc
