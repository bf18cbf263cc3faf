#include "dunkl/error.hpp"

namespace dunkl {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DegenerateArrangement: return "DegenerateArrangement";
    case ErrorCode::NotEssential: return "NotEssential";
    case ErrorCode::FlatNotInLattice: return "FlatNotInLattice";
    case ErrorCode::FlatIsOrigin: return "FlatIsOrigin";
    case ErrorCode::FlatReducible: return "FlatReducible";
    case ErrorCode::AmbiguousIrreducibleIntersection: return "AmbiguousIrreducibleIntersection";
    case ErrorCode::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ArcTooClose: return "ArcTooClose";
    case ErrorCode::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorCode::ClassificationMismatch: return "ClassificationMismatch";
    case ErrorCode::NotHyperbolic: return "NotHyperbolic";
    case ErrorCode::IntegralNotConverged: return "IntegralNotConverged";
    case ErrorCode::PathCollision: return "PathCollision";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::SingularBasis: return "SingularBasis";
    case ErrorCode::CuspHasNoAngle: return "CuspHasNoAngle";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
  }
  return "Unknown";
}

bool is_internal(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ClassificationMismatch:
    case ErrorCode::QuadratureNotConverged:
    case ErrorCode::IntegralNotConverged:
      return true;
    default:
      return false;
  }
}

}  // namespace dunkl
