#pragma once

#include <stdexcept>
#include <string>

namespace singord {

// Base class for all engine errors. Subclasses map onto the CLI exit codes:
// input errors -> 2, genericity/inconclusive -> 3, resource ceilings -> 4,
// verification/bound failures -> 1.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InputError : Error {
    using Error::Error;
};

struct ZeroInput : InputError {
    explicit ZeroInput(const std::string& msg = "zero input polynomial") : InputError(msg) {}
};

struct OddOrder : InputError {
    explicit OddOrder(const std::string& msg = "series has odd order, no square root") : InputError(msg) {}
};

struct ExtensionDepth : InputError {
    explicit ExtensionDepth(const std::string& msg = "second independent quadratic extension required")
        : InputError(msg) {}
};

struct NotReduced : InputError {
    explicit NotReduced(const std::string& msg = "germ is not reduced") : InputError(msg) {}
};

struct NonInvertible : InputError {
    explicit NonInvertible(const std::string& msg = "map has non-invertible linear part") : InputError(msg) {}
};

struct ProximityViolation : InputError {
    explicit ProximityViolation(const std::string& msg = "cluster tree violates proximity inequality")
        : InputError(msg) {}
};

struct OverlappingSupport : InputError {
    explicit OverlappingSupport(const std::string& msg = "schemes have overlapping support") : InputError(msg) {}
};

struct SymbolicPosition : InputError {
    explicit SymbolicPosition(const std::string& msg = "scheme has symbolic positions, sample first")
        : InputError(msg) {}
};

struct ModeUnsupported : InputError {
    explicit ModeUnsupported(const std::string& msg = "sampling mode unsupported for this scheme")
        : InputError(msg) {}
};

struct CommonComponent : InputError {
    explicit CommonComponent(const std::string& msg = "germs share a component through the point")
        : InputError(msg) {}
};

struct ResourceError : Error {
    using Error::Error;
};

struct NonFiniteColength : ResourceError {
    explicit NonFiniteColength(const std::string& msg =
                                   "colength did not certify below the jet ceiling (non-isolated point?)")
        : ResourceError(msg) {}
};

struct GenericityFailure : Error {
    explicit GenericityFailure(const std::string& msg = "random samples failed genericity checks")
        : Error(msg) {}
};

struct VerificationFailure : Error {
    explicit VerificationFailure(const std::string& msg = "realized object failed verification") : Error(msg) {}
};

struct ConditionFailed : Error {
    explicit ConditionFailed(const std::string& msg = "existence condition fails for the request") : Error(msg) {}
};

// An internal consistency check failed; always indicates an engine bug.
struct InvariantBreach : Error {
    explicit InvariantBreach(const std::string& msg) : Error(msg) {}
};

} // namespace singord
