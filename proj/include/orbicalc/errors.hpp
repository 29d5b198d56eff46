#pragma once

#include <stdexcept>
#include <string>

namespace orbicalc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exact-lattice
struct SingularMatrix : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };
struct NotPrime : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

// hirzebruch-jung
struct DivisionByZero : Error { using Error::Error; };
struct InvalidChainEntry : Error { using Error::Error; };
struct InvalidSingularity : Error { using Error::Error; };

// surface-calculus
struct InvalidIncidence : Error { using Error::Error; };
struct NonIntegralGenus : Error { using Error::Error; };
struct NonRepresentableClass : Error { using Error::Error; };
struct AdjunctionViolation : Error { using Error::Error; };
struct UndefinedCase : Error { using Error::Error; };

// orbifold
struct NotAChain : Error { using Error::Error; };
struct NotNegativeDefinite : Error { using Error::Error; };
struct ChainTouchesSingularPoint : Error { using Error::Error; };
struct CoprimalityViolation : Error { using Error::Error; };
struct MultiplicityNotGreaterThanOne : Error { using Error::Error; };
struct UnknownDivisor : Error { using Error::Error; };

// seifert
struct MissingPairingData : Error { using Error::Error; };
struct H1NotZero : Error { using Error::Error; };
struct BadLocalInvariant : Error { using Error::Error; };

// scenario-cli
struct ParseError : Error { using Error::Error; };
struct StepError : Error { using Error::Error; };

}  // namespace orbicalc
