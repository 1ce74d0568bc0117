#pragma once

#include <stdexcept>
#include <string>

namespace kacrice {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Problem validation
struct DimensionMismatch : Error { using Error::Error; };
struct NotPSD : Error { using Error::Error; };
struct BadGroups : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };

// Knot / pivot computation
struct TieAtMax : Error { using Error::Error; };
struct NegativeFactor : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct NonMonotone : Error { using Error::Error; };
struct SingularG : Error { using Error::Error; };

// Harness
struct EmptySample : Error { using Error::Error; };
struct UnknownScenario : Error { using Error::Error; };

struct MaxIterations : Error {
  double best_value;
  double residual;
  MaxIterations(const std::string& what, double value, double res)
      : Error(what), best_value(value), residual(res) {}
};

struct FrontendError : Error {
  long replicate;
  FrontendError(const std::string& what, long rep)
      : Error(what + " (replicate " + std::to_string(rep) + ")"), replicate(rep) {}
};

}  // namespace kacrice
