#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gmaj/partition.hpp"

namespace gmaj {

/// One failed inequality: which condition, at which 1-based index (0 for the
/// total-sum condition), and the two compared values.
struct violation {
    std::string condition;
    long long index = 0;
    ext_int lhs, rhs;
};

struct verdict {
    bool holds = false;
    std::optional<violation> first_violation;
};

/// Pivot indices of g against d: h_j = min{ i | d_{i-j+1} < g_i }, j = 1..s.
/// Always defined because the d side reads -inf past the end. The sequence
/// h_1..h_s is not necessarily monotone and nothing here assumes it is.
std::vector<long long> pivot_indices(const partition& d, const partition& g, long long s);

/// Generalized majorization g < (d, a): interlacing d_i >= g_{i+s}, the
/// prefix-sum bounds at the pivots, and equality of total sums.
/// first_violation reports the lowest failing index of the first failed
/// condition, in the order interlacing, total-sum, prefix-bound.
verdict check_exact(const partition& g, const partition& d, const partition& a);

/// Weak generalized majorization: interlacing, tail-sum lower bounds at the
/// pivots, and total sum >=. Violation order: interlacing, total-sum,
/// tail-bound.
verdict check_weak(const partition& g, const partition& d, const partition& a);

/// Whether the suffix of g starting at cut u dominates the shifted suffix of
/// d plus the tail of a:  sum_{i>=u} g_i >= sum_{i>=u-j} d_i + sum_{i>j} a_i.
/// Requires u to lie in the pivot band (h_j, h_{j+1}] with h_0 = 0 and
/// h_{s+1} = |g|+1; throws index_out_of_band otherwise.
bool suffix_dominance(const partition& g, const partition& d, const partition& a,
                      long long u, long long j);

} // namespace gmaj
