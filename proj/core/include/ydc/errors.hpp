#pragma once

#include <stdexcept>
#include <string>

namespace ydc {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (bad partition text, negative part, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Input exceeds a hard engine limit (weight cap, oracle cap, genus cap).
struct ResourceError : Error {
    using Error::Error;
};

/// Cache or certificate file could not be read or written.
struct IoError : Error {
    using Error::Error;
};

/// A stated hypothesis of a constructive algorithm does not hold.
struct PreconditionError : Error {
    using Error::Error;
};

/// The residue class mod 1 would be all of Z, which is not a progression.
struct WouldBeAllIntegers : DomainError {
    using DomainError::DomainError;
};

/// A constructive algorithm produced output that failed its own check.
struct ConstructionBug : Error {
    using Error::Error;
};

/// A certificate replay violated refinedness or endpoint conditions.
struct CertificateInvalid : Error {
    using Error::Error;
};

/// Raised by verify_sequence; `step` is the offending step index (-1 for
/// endpoint mismatches).
struct VerificationError : Error {
    enum class Kind { NotLinked, WrongWeightJump, WrongEndpoint };

    VerificationError(Kind kind, int step, const std::string& what)
        : Error(what), kind(kind), step(step) {}

    Kind kind;
    int step;
};

}  // namespace ydc
