#pragma once

#include <stdexcept>
#include <string>

namespace pbquad {

// Base for every error the library reports. Logic errors (violated
// internal invariants) use std::logic_error instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed .pbf text, rational literal, or edge list.
class ParseError : public Error {
public:
    using Error::Error;
};

// Input violates an operation's precondition (wrong universe, non-submodular
// input to the flow engine, nonpositive coefficient, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

// An exhaustive enumeration would exceed the configured variable cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace pbquad
