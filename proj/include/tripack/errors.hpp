#ifndef TRIPACK_ERRORS_HPP
#define TRIPACK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tripack {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input (JSON syntax, type invariant violations found while loading).
struct ParseError : Error {
    using Error::Error;
};

// An operation was called outside its stated precondition
// (wrong graph class, case mismatch, instance too large, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// A numeric argument is outside the operation's domain.
struct DomainError : Error {
    using Error::Error;
};

// A search exceeded its node budget.
struct BudgetError : Error {
    using Error::Error;
};

// No object with the requested properties exists (or could be sampled).
struct InfeasibleError : Error {
    using Error::Error;
};

} // namespace tripack

#endif
