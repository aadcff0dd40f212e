#pragma once

#include <stdexcept>
#include <string>

namespace camspec {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: bad JSON, unknown schema, wrong shapes or scalar encodings
// in parsed documents.  CLI exit code 2.
struct ParseError : Error {
    using Error::Error;
};

// Valid input outside an operation's domain: division by zero, a matrix not in
// the required subspace, a value that is not an eigenvalue, a singular
// conjugator, and similar precondition violations.  CLI exit code 3.
struct DomainError : Error {
    using Error::Error;
};

// Enumeration requested beyond the supported size bound.
struct CapacityError : DomainError {
    using DomainError::DomainError;
};

// Kernel-line reduction preconditions failed (kernel dimension != 1 or kernel
// not inside the V-block).
struct ReductionError : DomainError {
    using DomainError::DomainError;
};

// A genericity assumption failed (e.g. both reduced determinants vanish).
struct GenericityError : DomainError {
    using DomainError::DomainError;
};

// An asserted mathematical property or dual-route consistency check failed.
// Reaching this indicates an internal inconsistency.  CLI exit code 4.
struct PropertyError : Error {
    using Error::Error;
};

} // namespace camspec
