#pragma once

#include <stdexcept>
#include <string>

namespace cvw {

enum class ErrorCode {
  NotSymmetric,
  NotPhysical,
  OddDimension,
  DimensionMismatch,
  DegenerateBlock,
  SingularSum,
  ImpureLocalCM,
  NegativeC,
  InvalidArgument,
  SingularGamma2,
  NoConvergence,
  OptimFailure,
  NotPositive,
  SingularMatrix,
  StationarityViolated,
  GridTooNarrow,
  UnsupportedOrder,
  UnclassifiedKernel,
};

const char* to_string(ErrorCode code);

// Every library failure is an Error; `value` carries the offending number when
// one exists (e.g. the most negative eigenvalue of gamma + i sigma).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, double value = 0.0);

  ErrorCode code() const noexcept { return code_; }
  double value() const noexcept { return value_; }

 private:
  ErrorCode code_;
  double value_;
};

}  // namespace cvw
