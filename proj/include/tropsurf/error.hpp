#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropsurf {

enum class ErrorCode {
  SyntaxError,
  NonRegular,
  IncoherentIncidence,
  Disconnected,
  UnknownId,
  MissingAlpha,
  DuplicateAlpha,
  ConstraintViolated,
  NotDegreeTwo,
  NotSymmetric,
  Singular,
  DimensionMismatch,
  NotASurface,
  NotVerifiedDecomposition,
  AlreadyOrientable,
  NotSemidefiniteAtVertex,
  NotIncident,
  PreconditionViolated,
  NotACocycle,
  NotSubcomplex,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above; the
/// message is a single human-readable line.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tropsurf
