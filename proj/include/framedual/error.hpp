#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace framedual {

enum class ErrorCode {
  NonConvergence,
  FieldMismatch,
  ShapeMismatch,
  RankDeficient,
  IndexOutOfRange,
  SizeLimit,
  AmbiguousSupport,
  SingularSubset,
  InvalidSpectrum,
  NoTightDual,
  BoundInfeasible,
  TooManyPicks,
  BelowCanonical,
  BadTarget,
  DuplicateNode,
  InvalidArgument,
  ZeroWindow,
  ScheduleExhausted,
  BadShape,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it to a stable exit status.
class FrameError : public std::runtime_error {
 public:
  FrameError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace framedual
