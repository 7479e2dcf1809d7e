#pragma once

#include "gmaj/partition.hpp"

namespace gmaj {

/// A problem instance: the quadruple of partitions (a, b, c, d).
///
/// Structural invariants, checked at construction:
///   |d| + |a| = |c| + |b|   (so both candidate lengths agree),
///   c and d share no value,
///   |c| >= 1 and |d| >= 1 (a and b may be empty).
struct instance {
    partition a, b, c, d;

    instance(partition a_, partition b_, partition c_, partition d_);

    long long s() const { return a.size(); }
    long long k() const { return b.size(); }
    long long n() const { return c.size(); }
    long long m() const { return d.size(); }

    /// Common length of any candidate witness, m + s = n + k.
    long long witness_len() const { return m() + s(); }

    std::string str() const;
};

} // namespace gmaj
