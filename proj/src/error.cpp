#include "cvw/error.hpp"

namespace cvw {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotPhysical: return "NotPhysical";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegenerateBlock: return "DegenerateBlock";
    case ErrorCode::SingularSum: return "SingularSum";
    case ErrorCode::ImpureLocalCM: return "ImpureLocalCM";
    case ErrorCode::NegativeC: return "NegativeC";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SingularGamma2: return "SingularGamma2";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::OptimFailure: return "OptimFailure";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::StationarityViolated: return "StationarityViolated";
    case ErrorCode::GridTooNarrow: return "GridTooNarrow";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::UnclassifiedKernel: return "UnclassifiedKernel";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, double value)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      value_(value) {}

}  // namespace cvw
