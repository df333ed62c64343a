#include "toricmirror/error.hpp"

namespace toricmirror {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonSpanningRays: return "NonSpanningRays";
    case ErrorCode::NonPrimitiveRay: return "NonPrimitiveRay";
    case ErrorCode::InconsistentLambda: return "InconsistentLambda";
    case ErrorCode::BasisNotKernel: return "BasisNotKernel";
    case ErrorCode::UnboundedPolytope: return "UnboundedPolytope";
    case ErrorCode::DegeneratePolytope: return "DegeneratePolytope";
    case ErrorCode::PointOutsidePolytope: return "PointOutsidePolytope";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ZeroCoordinate: return "ZeroCoordinate";
    case ErrorCode::IncompleteRootSet: return "IncompleteRootSet";
    case ErrorCode::RootCountMismatch: return "RootCountMismatch";
    case ErrorCode::NotAProduct: return "NotAProduct";
    case ErrorCode::UnknownExample: return "UnknownExample";
    case ErrorCode::DimensionUnstable: return "DimensionUnstable";
    case ErrorCode::EmptyQuotient: return "EmptyQuotient";
    case ErrorCode::ClassNotReducible: return "ClassNotReducible";
    case ErrorCode::VertexMismatch: return "VertexMismatch";
    case ErrorCode::Unbalanced: return "Unbalanced";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace toricmirror
