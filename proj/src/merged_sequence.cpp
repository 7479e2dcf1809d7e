#include "gmaj/merged_sequence.hpp"

#include "gmaj/errors.hpp"

namespace gmaj {

ext_int merged_sequence::value_at(long long i) const {
    if (i <= 0) return ext_int::plus_infinity();
    if (i > size()) return ext_int::minus_infinity();
    return entries_[static_cast<std::size_t>(i - 1)].value;
}

ext_int merged_sequence::sum(long long lo, long long hi) const {
    if (lo > hi) return 0;
    const bool below = lo <= 0;
    const bool above = hi > size();
    if (below && above)
        throw mixed_infinities("range sum [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "] straddles both sentinels");
    if (below) return ext_int::plus_infinity();
    if (above) return ext_int::minus_infinity();
    ext_int acc = 0;
    for (long long i = lo; i <= hi; ++i)
        acc += entries_[static_cast<std::size_t>(i - 1)].value;
    return acc;
}

long long merged_sequence::position_of(merge_origin o, long long original_index) const {
    const auto& table = (o == merge_origin::base) ? base_pos_ : added_pos_;
    if (original_index < 1 || original_index > static_cast<long long>(table.size()))
        throw length_mismatch("merged_sequence: no entry with index " +
                              std::to_string(original_index));
    return table[static_cast<std::size_t>(original_index - 1)];
}

long long merged_sequence::count_greater(long long threshold) const {
    long long c = 0;
    for (const auto& e : entries_) {
        if (e.value > threshold)
            ++c;
        else
            break;
    }
    return c;
}

merged_sequence merge_union(const partition& base, const partition& added) {
    merged_sequence out;
    out.entries_.reserve(static_cast<std::size_t>(base.size() + added.size()));
    out.base_pos_.resize(static_cast<std::size_t>(base.size()));
    out.added_pos_.resize(static_cast<std::size_t>(added.size()));
    long long bi = 1, ai = 1;
    while (bi <= base.size() || ai <= added.size()) {
        // On equal values the added entry goes first.
        bool take_added = ai <= added.size() &&
                          (bi > base.size() || added.entry(ai) >= base.entry(bi));
        if (take_added) {
            out.added_pos_[static_cast<std::size_t>(ai - 1)] = out.size() + 1;
            out.entries_.push_back({added.entry(ai), merge_origin::added, ai});
            ++ai;
        } else {
            out.base_pos_[static_cast<std::size_t>(bi - 1)] = out.size() + 1;
            out.entries_.push_back({base.entry(bi), merge_origin::base, bi});
            ++bi;
        }
    }
    return out;
}

} // namespace gmaj
