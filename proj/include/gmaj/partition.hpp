#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gmaj/ext_int.hpp"

namespace gmaj {

/// A partition: a finite nonincreasing sequence of integers. Entries may be
/// zero or negative. Indexing is 1-based throughout, with sentinel-extended
/// reads: index <= 0 gives +inf, index > length gives -inf.
class partition {
public:
    partition() = default;

    /// Validates nonincreasing order; throws not_nonincreasing on the first
    /// ascent. Values and length are preserved exactly.
    explicit partition(std::vector<long long> values, std::string name = "sequence");

    long long size() const { return static_cast<long long>(values_.size()); }
    bool empty() const { return values_.empty(); }

    /// Sentinel-extended read at any integer index.
    ext_int at(long long i) const {
        if (i <= 0) return ext_int::plus_infinity();
        if (i > size()) return ext_int::minus_infinity();
        return values_[static_cast<std::size_t>(i - 1)];
    }

    /// In-range read; 1 <= i <= size().
    long long entry(long long i) const;

    /// Sum of entries over the index range [lo, hi], empty ranges are 0.
    /// A range touching indices <= 0 evaluates to +inf, one touching indices
    /// past the end to -inf; touching both throws mixed_infinities.
    ext_int sum(long long lo, long long hi) const;

    /// Finite sum of all entries.
    long long total() const;

    const std::vector<long long>& values() const { return values_; }

    friend bool operator==(const partition& a, const partition& b) {
        return a.values_ == b.values_;
    }

    std::string str() const;

private:
    std::vector<long long> values_;
};

} // namespace gmaj
