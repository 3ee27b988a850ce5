#pragma once

#include <stdexcept>
#include <string>

namespace nipreg {

/// Malformed spec strings, bad CLI flags: usage errors (exit code 2).
struct SpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Violated preconditions (group mismatch, empty input, cap exceeded).
/// Messages carry the witness element where one exists.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A stated theorem failed on a concrete instance. This is never
/// swallowed: the instance is a counterexample and the run fails loudly.
struct FalsificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A guarded float comparison landed inside its ambiguity margin.
struct BoundaryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace nipreg
