#pragma once

#include <stdexcept>
#include <string>

namespace meglab {

// Error taxonomy mirrors the CLI exit-code contract (see tools/meglab.cpp).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (edge-list or graph6).
struct ParseError : Error {
    using Error::Error;
};

// Instance exceeds a size guard (solver guard, bitset capacity, ...).
struct GuardError : Error {
    using Error::Error;
};

// Operation requires a connected graph (or a reachable pair) and got none.
struct DisconnectedError : Error {
    using Error::Error;
};

// Generator arguments violate a family's constraints.
struct FamilyArgError : Error {
    using Error::Error;
};

// Shortest-path count exceeded the enumeration cap.
struct CapExceededError : Error {
    using Error::Error;
};

// Checked integer arithmetic would wrap.
struct OverflowError : Error {
    using Error::Error;
};

}  // namespace meglab
