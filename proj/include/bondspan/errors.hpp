#pragma once

#include <stdexcept>
#include <string>

namespace bondspan {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input data or an operation request that the instance cannot satisfy
// (unknown edge id, non-exponential distribution where one is required, ...).
struct ValidationError : Error {
    using Error::Error;
};

// Operation requires a connected graph.
struct DisconnectedError : Error {
    using Error::Error;
};

// Instance exceeds the documented desk-scale limit of an enumeration or
// exact-recursion routine.
struct SizeGuardError : Error {
    using Error::Error;
};

} // namespace bondspan
