#pragma once

#include <stdexcept>
#include <string>

namespace intdiff {

// Base class for all library errors that are not programming mistakes.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Expression or literal text could not be parsed; position is a 0-based
// byte offset into the input.
struct parse_error : error {
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

// A window is too narrow for the requested module computation.
struct window_too_small : error {
    using error::error;
};

// The linear system for a section/splitting has no solution; the input
// window data does not come from a valid module.
struct infeasible_system : error {
    using error::error;
};

// Module data violates a structural invariant (shape mismatch, rank drop,
// non-idempotent projector, ...).
struct invalid_module : error {
    using error::error;
};

// jordan_type was called on a matrix that is not nilpotent.
struct not_nilpotent : error {
    using error::error;
};

// direct_sum / hom on modules whose weight classes or windows cannot be
// reconciled.
struct mismatch_error : error {
    using error::error;
};

}  // namespace intdiff
