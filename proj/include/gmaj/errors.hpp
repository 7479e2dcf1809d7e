#pragma once

#include <stdexcept>
#include <string>

namespace gmaj {

/// Base class for all errors raised by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input sequence is not nonincreasing. `index` is the 1-based position of
/// the first ascent (entries[index] < entries[index+1]).
struct not_nonincreasing : error {
    not_nonincreasing(std::string what, long long index_)
        : error(std::move(what)), index(index_) {}
    long long index;
};

/// A summation range touches indices before the start and past the end at
/// the same time, so its value would be (+inf) + (-inf).
struct mixed_infinities : error {
    using error::error;
};

/// Arithmetic combining +inf and -inf, or 64-bit overflow.
struct arithmetic_error : error {
    using error::error;
};

/// Sequence lengths do not satisfy the operation's contract.
struct length_mismatch : error {
    using error::error;
};

/// Cut position u does not lie in the pivot band (h_j, h_{j+1}].
struct index_out_of_band : error {
    using error::error;
};

/// Problem instance violates a structural invariant (lengths, disjointness).
struct precondition_violated : error {
    using error::error;
};

/// An internal consistency assertion failed; indicates a bug in the engine,
/// never bad user input.
struct internal_invariant_violated : error {
    using error::error;
};

/// Homogenization called with a witness whose sum is below the target.
struct negative_omega : error {
    using error::error;
};

/// No prefix length satisfies the homogenization feasibility condition.
struct infeasible_homogenization : error {
    using error::error;
};

inline void internal_check(bool cond, const std::string& what) {
    if (!cond)
        throw internal_invariant_violated(what);
}

} // namespace gmaj
