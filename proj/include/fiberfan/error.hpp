#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fiberfan {

enum class ErrorCode {
  NotSurjective,
  DegenerateInput,
  NotAFace,
  DimMismatch,
  PointOutsideQ,
  SupportMismatch,
  CellNotInComplex,
  CapExceeded,
  ConeNotInHost,
  NotASubset,
  NonPrimitiveRay,
  NotComplete,
  ArrangementMismatch,
  TooFewPoints,
  InvalidTriangulation,
  NotFullDimensional,
  ParseError,
  SchemaError,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace fiberfan
