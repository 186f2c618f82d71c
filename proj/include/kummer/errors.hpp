#pragma once

#include <stdexcept>
#include <string>

namespace kummer {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A parameter is outside an operation's documented domain.
struct InvalidParameterError : Error {
    using Error::Error;
};

// Base field characteristic is < 5 or not prime.
struct UnsupportedCharacteristicError : Error {
    using Error::Error;
};

// A supplied modulus (base-field polynomial or top binomial) is reducible
// or malformed.
struct InvalidModulusError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

// m does not decompose as k*l with k > 1, k | q-1, l = ord(q mod m), or the
// coset cross-check failed.
struct DecompositionError : Error {
    using Error::Error;
};

// A witness-set enumeration or distinctness check would exceed its cap.
struct EnumerationCapError : Error {
    using Error::Error;
};

// Factorization exceeded its time budget; the instance is unverifiable,
// not wrong.
struct FactorizationTimeoutError : Error {
    using Error::Error;
};

// A conjugate that must be inverted is zero (cannot happen for valid
// Kummer parameters; guarded anyway).
struct DegenerateBinomialError : Error {
    using Error::Error;
};

// No m-related element exists for the requested (q, m).
struct NoConstructionError : Error {
    using Error::Error;
};

}  // namespace kummer
