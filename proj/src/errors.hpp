#pragma once
// Error taxonomy shared by the whole library. Every failure mode that can
// cross the C API boundary carries one of these status codes; the C layer
// catches Error and maps status to the public enum one-to-one.

#include <stdexcept>
#include <string>

namespace relmod {

enum class Status : int {
  Ok = 0,
  InvalidArgument = 1,
  DegenerateWeight = 2,
  NotTypical = 3,
  NotInAlcove = 4,
  CriticalGrading = 5,
  NotInLambdaZ = 6,
  IllFormedDiagram = 7,
  NotSimple = 8,
  DegenerateDelta = 9,
  Internal = 10,
};

struct Error : std::runtime_error {
  Status status;
  Error(Status s, const std::string& msg) : std::runtime_error(msg), status(s) {}
};

// A denominator of a closed formula vanishes at the given weight.
struct DegenerateWeightError : Error {
  explicit DegenerateWeightError(const std::string& msg)
      : Error(Status::DegenerateWeight, msg) {}
};

// An odd-root factor of the typicality product vanishes.
struct NotTypicalError : Error {
  explicit NotTypicalError(const std::string& msg)
      : Error(Status::NotTypical, msg) {}
};

// Weight outside the (closed or open) alcove, or c-part not in N^{r-1}.
struct NotInAlcoveError : Error {
  explicit NotInAlcoveError(const std::string& msg)
      : Error(Status::NotInAlcove, msg) {}
};

// Perturbative degree lies in the critical set (2a integral).
struct CriticalGradingError : Error {
  explicit CriticalGradingError(const std::string& msg)
      : Error(Status::CriticalGrading, msg) {}
};

// Weight not in the lattice required for a one-dimensional module.
struct NotInLambdaZError : Error {
  explicit NotInLambdaZError(const std::string& msg)
      : Error(Status::NotInLambdaZ, msg) {}
};

// A tangle word fails validation (arity, colors, cut strand, ...).
struct IllFormedDiagramError : Error {
  explicit IllFormedDiagramError(const std::string& msg)
      : Error(Status::IllFormedDiagram, msg) {}
};

// An endomorphism is not scalar where simplicity is required.
struct NotSimpleError : Error {
  explicit NotSimpleError(const std::string& msg)
      : Error(Status::NotSimple, msg) {}
};

// The normalization scalars of the surgery invariant vanish.
struct DegenerateDeltaError : Error {
  explicit DegenerateDeltaError(const std::string& msg)
      : Error(Status::DegenerateDelta, msg) {}
};

}  // namespace relmod
