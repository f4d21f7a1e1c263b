#pragma once

#include <stdexcept>
#include <string>

namespace entrobounds {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerics
struct NonHermitianInput : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct NotPSD : Error { using Error::Error; };
struct NotInvertible : Error { using Error::Error; };

// State and channel construction
struct DimensionMismatch : Error { using Error::Error; };
struct LabelMismatch : Error { using Error::Error; };
struct NormalizationError : Error { using Error::Error; };
struct UnknownOutcome : Error { using Error::Error; };
struct ZeroReferenceProbability : Error { using Error::Error; };
struct SingularAverageState : Error { using Error::Error; };
struct DimensionTooLarge : Error { using Error::Error; };

// IO
struct ParseError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

// Raised when two independently computed routes to the same quantity drift
// apart beyond tolerance. Seeing this means a bug, not bad input.
struct CheckFailure : Error { using Error::Error; };

}  // namespace entrobounds
