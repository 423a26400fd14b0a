#pragma once

#include <stdexcept>
#include <string>

namespace alma {

/// Bad user input: malformed files, unknown symbols, shape mismatches.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A broken internal invariant. Indicates a bug rather than bad input.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Failure talking to an external membership oracle process.
class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace alma
