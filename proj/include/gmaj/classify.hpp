#pragma once

#include <optional>
#include <vector>

#include "gmaj/ext_int.hpp"
#include "gmaj/instance.hpp"

namespace gmaj {

enum class element_origin { c_list, d_list };

enum class decision_branch {
    q_exceeds,       // threshold count exceeded the bound: element enters the set
    part_a_accepted, // window test accepted: element stays out
    part_b_passed,   // surplus inequality held: element stays out
    part_b_failed    // surplus inequality failed: element enters the set
};

/// Counts the decision actually used, as computed against the partial sets
/// at the moment the element was processed.
struct decision_snapshot {
    long long in_set_below = 0;     // chosen opposite-list entries strictly below
    long long not_in_set_above = 0; // same-list entries with larger index left out
    std::optional<long long> window; // window size, when parts (a)/(b) were reached
};

struct decision_trace_entry {
    element_origin origin;
    long long index = 0; // 1-based index in its own list
    long long value = 0;
    ext_int q;
    decision_branch branch = decision_branch::q_exceeds;
    bool member = false; // final membership of this index in S (for c) / Delta (for d)
    decision_snapshot snapshot;
};

/// Output of the inductive selection over the merged sequence of c and d.
///
/// S and Delta are the retained index sets (ascending). c_sel and d_sel hold
/// the corresponding values in nonincreasing order; rank r in these arrays
/// matches rank r of the index in ascending order.
struct sd_result {
    std::vector<long long> S;     // subset of 1..n
    std::vector<long long> Delta; // subset of 1..m
    std::vector<decision_trace_entry> trace;
    std::vector<long long> c_sel;
    std::vector<long long> d_sel;

    bool in_S(long long j) const;
    bool in_Delta(long long j) const;

    /// Selected value by rank with boundary sentinels: rank 0 reads +inf,
    /// rank past the end reads -inf.
    ext_int c_sel_at(long long rank) const;
    ext_int d_sel_at(long long rank) const;
};

/// Run the inductive classification: process all entries of the merged
/// sequence of c and d in ascending value order (ties within one list:
/// largest index first) and decide membership of each element in Delta
/// (for d) or S (for c) by the threshold count, the window test, and the
/// surplus inequality, evaluated against the partial sets.
sd_result classify(const instance& inst);

} // namespace gmaj
