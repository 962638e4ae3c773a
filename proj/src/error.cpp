#include "tropsurf/error.hpp"

namespace tropsurf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NonRegular: return "NonRegular";
    case ErrorCode::IncoherentIncidence: return "IncoherentIncidence";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::MissingAlpha: return "MissingAlpha";
    case ErrorCode::DuplicateAlpha: return "DuplicateAlpha";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::NotDegreeTwo: return "NotDegreeTwo";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotASurface: return "NotASurface";
    case ErrorCode::NotVerifiedDecomposition: return "NotVerifiedDecomposition";
    case ErrorCode::AlreadyOrientable: return "AlreadyOrientable";
    case ErrorCode::NotSemidefiniteAtVertex: return "NotSemidefiniteAtVertex";
    case ErrorCode::NotIncident: return "NotIncident";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::NotSubcomplex: return "NotSubcomplex";
  }
  return "Unknown";
}

}  // namespace tropsurf
