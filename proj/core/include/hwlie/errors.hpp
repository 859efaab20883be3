#pragma once

#include <stdexcept>
#include <string>

namespace hwlie {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Division by zero in exact arithmetic.
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

/// Malformed textual input (scalars, symbols, vectors, flags).
struct ParseError : Error {
    using Error::Error;
};

/// Symbols or vectors used with an algebra/module they do not belong to.
struct SpecMismatch : Error {
    using Error::Error;
};

/// Structurally invalid input: bad structure-constant table, bad filtration,
/// highest weight not covering the Cartan basis, tail entries < 1, ...
struct ValidationError : Error {
    using Error::Error;
};

/// Argument outside an operation's domain (e.g. positive level for pbw_basis).
struct DomainError : Error {
    using Error::Error;
};

/// An invariant the library guarantees was observed broken.  Reaching this is
/// a bug, not a user error.
struct InternalConsistencyError : Error {
    using Error::Error;
};

/// Missing or corrupt golden fixture.
struct FixtureError : Error {
    using Error::Error;
};

} // namespace hwlie
