#pragma once

#include <stdexcept>

namespace dynred {

// Input that cannot be parsed (instance files, DIMACS text, CLI ranges).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A desk-scale guard was exceeded or a protocol precondition is broken.
struct GuardViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace dynred
