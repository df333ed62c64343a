#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricmirror {

enum class ErrorCode {
  InvalidArgument,
  NonSpanningRays,
  NonPrimitiveRay,
  InconsistentLambda,
  BasisNotKernel,
  UnboundedPolytope,
  DegeneratePolytope,
  PointOutsidePolytope,
  IndexOutOfRange,
  ZeroCoordinate,
  IncompleteRootSet,
  RootCountMismatch,
  NotAProduct,
  UnknownExample,
  DimensionUnstable,
  EmptyQuotient,
  ClassNotReducible,
  VertexMismatch,
  Unbalanced,
  UnknownFixture,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace toricmirror
