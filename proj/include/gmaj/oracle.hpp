#pragma once

#include <optional>

#include "gmaj/engine.hpp"
#include "gmaj/instance.hpp"

namespace gmaj {

struct search_bounds {
    long long lo = 0;
    long long hi = 0;
    unsigned long long max_candidates = 10'000'000;
};

/// Value window covering every witness the construction can produce: one
/// below the smallest input value up to one above the largest.
search_bounds default_bounds(const instance& inst);

struct oracle_outcome {
    /// Lexicographically greatest witness within the bounds, if any.
    std::optional<partition> found;
    unsigned long long candidates_checked = 0;
    /// False when the candidate cap was hit first; a "none found" outcome is
    /// then inconclusive.
    bool exhausted = false;
};

/// Enumerate all nonincreasing sequences of the witness length with entries
/// in [lo, hi], in lexicographically descending order, and return the first
/// one weakly majorized by both (d, a) and (c, b).
oracle_outcome enumerate_weak(const instance& inst, const search_bounds& bounds);

/// Same search against the exact relation on both pairs; candidates whose
/// total differs from sum(d) + sum(a) are skipped without a full check.
oracle_outcome enumerate_exact(const instance& inst, const search_bounds& bounds);

struct agreement_report {
    certificate weak_engine, exact_engine;
    oracle_outcome weak_oracle, exact_oracle;
    bool weak_conclusive = false, exact_conclusive = false;
    bool weak_agree = false, exact_agree = false;

    bool all_agree() const { return weak_agree && exact_agree; }
};

/// Run engine and oracle on both modes and compare. An inconclusive oracle
/// outcome (cap hit, nothing found) never counts as disagreement.
agreement_report differential_check(const instance& inst, const search_bounds& bounds);

} // namespace gmaj
