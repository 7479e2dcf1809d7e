#pragma once

#include <vector>

#include "gmaj/partition.hpp"

namespace gmaj {

enum class merge_origin { base, added };

struct merged_entry {
    long long value;
    merge_origin origin;
    long long original_index; // 1-based index in the origin list
};

/// Order-preserving union of two partitions with occurrence-level tags.
///
/// Values are nonincreasing. On value ties across the two lists every
/// added-list occurrence precedes the base-list occurrence; within one list
/// equal values keep their original index order.
class merged_sequence {
public:
    merged_sequence() = default;

    long long size() const { return static_cast<long long>(entries_.size()); }
    const std::vector<merged_entry>& entries() const { return entries_; }

    /// Sentinel-extended value read (1-based).
    ext_int value_at(long long i) const;

    /// Range sum over values with the same sentinel rules as partition::sum.
    ext_int sum(long long lo, long long hi) const;

    /// 1-based position of the occurrence of the given source entry.
    long long position_of(merge_origin o, long long original_index) const;

    /// Number of entries with value strictly greater than the threshold;
    /// since values are nonincreasing this is a prefix length.
    long long count_greater(long long threshold) const;

    friend merged_sequence merge_union(const partition& base, const partition& added);

private:
    std::vector<merged_entry> entries_;
    std::vector<long long> base_pos_, added_pos_; // original index -> position
};

/// Merge two partitions into one nonincreasing tagged sequence.
merged_sequence merge_union(const partition& base, const partition& added);

} // namespace gmaj
