#include "bsurf/error.hpp"

namespace bsurf {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateTriangle: return "DuplicateTriangle";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NonPure: return "NonPure";
    case ErrorCode::NotABranchedSurface: return "NotABranchedSurface";
    case ErrorCode::IllegalMonodromy: return "IllegalMonodromy";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::NotASubcomplex: return "NotASubcomplex";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::CirclesIntersectLocus: return "CirclesIntersectLocus";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::DisksOverlap: return "DisksOverlap";
    case ErrorCode::DiskTouchesLocus: return "DiskTouchesLocus";
    case ErrorCode::InvalidL: return "InvalidL";
    case ErrorCode::DegenerateImageTriangle: return "DegenerateImageTriangle";
    case ErrorCode::NotSimplicial: return "NotSimplicial";
    case ErrorCode::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorCode::LocalModelFail: return "LocalModelFail";
    case ErrorCode::NotClosedSurface: return "NotClosedSurface";
    case ErrorCode::DuplicateValues: return "DuplicateValues";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code), detail_(detail) {}

} // namespace bsurf
