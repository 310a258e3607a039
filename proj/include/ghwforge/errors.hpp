#pragma once

#include <stdexcept>
#include <string>

namespace ghwforge {

// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrimeError : Error { using Error::Error; };
struct TooLargeError : Error { using Error::Error; };
struct FieldMismatchError : Error { using Error::Error; };
struct DivisionByZeroError : Error { using Error::Error; };
struct AmbientMismatchError : Error { using Error::Error; };
struct BadIndexError : Error { using Error::Error; };
struct EmptyIndexSetError : Error { using Error::Error; };
struct BadRankError : Error { using Error::Error; };
struct BadDimsError : Error { using Error::Error; };
struct ShapeMismatchError : Error { using Error::Error; };
struct ConditionViolatedError : Error { using Error::Error; };
struct AssumptionViolatedError : Error { using Error::Error; };
struct DegenerateFunctionalError : Error { using Error::Error; };
struct DuplicatePointsError : Error { using Error::Error; };
struct PointOnLineError : Error { using Error::Error; };
struct PointOffCurveError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// Raised when an internal consistency assertion fails; always a bug.
struct InternalError : Error { using Error::Error; };

}  // namespace ghwforge
