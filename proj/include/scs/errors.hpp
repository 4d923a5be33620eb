#pragma once

#include <stdexcept>
#include <string>

namespace scs {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input: word literals, word files, graph files.
struct ParseError : Error {
    using Error::Error;
};

// A documented precondition was violated by the caller.
struct PreconditionError : Error {
    using Error::Error;
};

// A guarantee that is re-checked at runtime did not hold. Seeing this
// exception means there is a bug in the library, not in the caller.
struct InvariantError : Error {
    using Error::Error;
};

}  // namespace scs
