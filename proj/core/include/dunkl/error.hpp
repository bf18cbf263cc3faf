#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dunkl {

enum class ErrorCode {
  InvalidInput,
  DegenerateArrangement,
  NotEssential,
  FlatNotInLattice,
  FlatIsOrigin,
  FlatReducible,
  AmbiguousIrreducibleIntersection,
  WeightOutOfRange,
  OutOfRange,
  ArcTooClose,
  QuadratureNotConverged,
  ClassificationMismatch,
  NotHyperbolic,
  IntegralNotConverged,
  PathCollision,
  StepTooLarge,
  SingularBasis,
  CuspHasNoAngle,
  HypothesisViolated,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Internal errors signal a numerical or logic failure rather than bad input
/// or a violated mathematical hypothesis.
bool is_internal(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dunkl
