#pragma once

#include <stdexcept>
#include <string>

namespace lrcpir {

// Base class for all contract violations raised by this library. Outcomes
// that are expected in normal operation (an uncorrectable pattern, a search
// that finds nothing) are returned as values, not thrown.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// gf
struct NotPrime : Error { using Error::Error; };
struct ReduciblePolynomial : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct ZeroElement : Error { using Error::Error; };

// matrix
struct IndexOutOfRange : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

// code
struct RankDeficientH : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct WrongSize : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };

// lrc
struct IndivisibleLocality : Error { using Error::Error; };
struct InconsistentLength : Error { using Error::Error; };
struct NotMds : Error { using Error::Error; };
struct NotSystematic : Error { using Error::Error; };
struct ParameterMismatch : Error { using Error::Error; };

// ematrix
struct InfeasibleRho : Error { using Error::Error; };
struct SwapExhausted : Error { using Error::Error; };
struct NonCompliantCode : Error { using Error::Error; };

// serialization
struct ParseError : Error { using Error::Error; };

}  // namespace lrcpir
