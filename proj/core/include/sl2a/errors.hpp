#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sl2a {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ring / element construction
struct ZeroDenominator : Error { using Error::Error; };
struct ZeroElement : Error { using Error::Error; };
struct UnsupportedRing : Error { using Error::Error; };
struct UnsupportedBase : Error { using Error::Error; };
struct Unsupported : Error { using Error::Error; };
struct NotIntegral : Error { using Error::Error; };
struct NotPrime : Error { using Error::Error; };
struct HypothesisViolated : Error { using Error::Error; };
struct UnsupportedQuotient : Error { using Error::Error; };

// matrices and words
struct NotUnimodular : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct UnknownGenerator : Error { using Error::Error; };
struct NotFullyLocalized : Error { using Error::Error; };

// amalgam
struct NotInA : Error { using Error::Error; };
struct NotInB : Error { using Error::Error; };
struct ReductionStuck : Error { using Error::Error; };

// witnesses
struct DivisibleByT : Error { using Error::Error; };
struct PDividesF0 : Error { using Error::Error; };
struct PairPrincipal : Error { using Error::Error; };
struct UndecidedPair : Error { using Error::Error; };
struct CongruenceViolated : Error { using Error::Error; };
struct BetaZero : Error { using Error::Error; };
struct Malformed : Error { using Error::Error; };

// search
struct BudgetTooLarge : Error { using Error::Error; };

// text input / output
struct SyntaxError : Error {
    std::size_t offset;
    SyntaxError(const std::string& what, std::size_t off)
        : Error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};
struct UnknownVariable : Error { using Error::Error; };
struct ZeroInverted : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };

} // namespace sl2a
