#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ohg {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input validation failures (bad construction data, unknown names).
struct ValidationError : Error {
    using Error::Error;
};

struct DuplicateName : ValidationError {
    using ValidationError::ValidationError;
};

struct DanglingReference : ValidationError {
    using ValidationError::ValidationError;
};

struct InvalidSign : ValidationError {
    using ValidationError::ValidationError;
};

struct UnknownElement : ValidationError {
    using ValidationError::ValidationError;
};

struct ParseError : ValidationError {
    using ValidationError::ValidationError;
};

// Structural preconditions of individual operations.
struct PreconditionViolated : Error {
    using Error::Error;
};

struct IsolatedVertex : PreconditionViolated {
    using PreconditionViolated::PreconditionViolated;
};

struct NotASignedGraph : PreconditionViolated {
    using PreconditionViolated::PreconditionViolated;
};

struct NotAPlainGraph : PreconditionViolated {
    using PreconditionViolated::PreconditionViolated;
};

struct NotSquare : PreconditionViolated {
    using PreconditionViolated::PreconditionViolated;
};

struct InvalidContributor : PreconditionViolated {
    using PreconditionViolated::PreconditionViolated;
};

// A configured cap was exceeded; the request is legal but too big.
struct ResourceGuard : Error {
    using Error::Error;
};

// Exact int64 arithmetic would wrap. Counts as a resource limit of this
// build, never silently wraps.
struct OverflowError : ResourceGuard {
    using ResourceGuard::ResourceGuard;
};

// A mathematical identity the code relies on failed; signals a bug.
struct InternalError : Error {
    using Error::Error;
};

// Interpolated coefficient came out non-integral; signals an arithmetic bug.
struct InternalNonIntegral : InternalError {
    using InternalError::InternalError;
};

// Enumeration caps shared across modules. Values are the defaults the CLI
// exposes as --max-contributors, --max-incidences-sweep, --max-walk-length.
struct Limits {
    std::uint64_t max_enumeration = 10'000'000;
    int max_sweep_incidences = 16;
    int max_walk_length = 4;
};

} // namespace ohg
