#include "fiberfan/error.hpp"

namespace fiberfan {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::PointOutsideQ: return "PointOutsideQ";
    case ErrorCode::SupportMismatch: return "SupportMismatch";
    case ErrorCode::CellNotInComplex: return "CellNotInComplex";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ConeNotInHost: return "ConeNotInHost";
    case ErrorCode::NotASubset: return "NotASubset";
    case ErrorCode::NonPrimitiveRay: return "NonPrimitiveRay";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::ArrangementMismatch: return "ArrangementMismatch";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::InvalidTriangulation: return "InvalidTriangulation";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

void raise(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace fiberfan
