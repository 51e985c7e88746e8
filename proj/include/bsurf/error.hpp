#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bsurf {

enum class ErrorCode {
  DuplicateTriangle,
  DegenerateTriangle,
  IndexOutOfRange,
  NonPure,
  NotABranchedSurface,
  IllegalMonodromy,
  NotACycle,
  NotASubcomplex,
  NotConnected,
  InvalidParameters,
  CirclesIntersectLocus,
  LengthMismatch,
  NotDisjoint,
  DisksOverlap,
  DiskTouchesLocus,
  InvalidL,
  DegenerateImageTriangle,
  NotSimplicial,
  BoundaryMismatch,
  LocalModelFail,
  NotClosedSurface,
  DuplicateValues,
  ParseError,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported through this one exception type; the code
// identifies the contract that was violated.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

private:
  ErrorCode code_;
  std::string detail_;
};

} // namespace bsurf
