#pragma once

#include <vector>

#include "gmaj/classify.hpp"
#include "gmaj/instance.hpp"

namespace gmaj {

/// Counting statistics attached to the selected values, with boundary rows.
///
/// Unprimed rows are indexed by the rank y of a selected c value (0..h'+1);
/// primed rows by the rank x of a selected d value (0..h+1):
///   m[y]  = #{ i | a_i > c^y }
///   t[y]  = s - (h' - y) + #{ i not in Delta | d_i < c^y }
///   z[y]  = #{ i | d_i > c^y }
///   w[y]  = #{ i not in Delta | c^y > d_i > c^(y+1) },  y = 0..h'
/// and symmetrically mp/tp/zp/wp with the roles of (c, d, a, s, Delta) and
/// (d, c, b, k, S) exchanged. Rank 0 reads +inf and rank h'+1 (h+1) -inf,
/// so t[0] = m + s - h - h' and t[h'+1] = s + 1 come out of the same
/// formulas.
struct derived_tables {
    long long h = 0;       // number of selected d values
    long long h_prime = 0; // number of selected c values
    long long t0 = 0;

    std::vector<long long> m, t, z; // size h'+2, index 0..h'+1
    std::vector<long long> w;       // size h'+1, index 0..h'
    std::vector<long long> mp, tp, zp; // size h+2, index 0..h+1
    std::vector<long long> wp;         // size h+1, index 0..h
};

derived_tables compute_tables(const instance& inst, const sd_result& sd);

} // namespace gmaj
