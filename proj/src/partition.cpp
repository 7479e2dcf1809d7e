#include "gmaj/partition.hpp"

#include <sstream>

#include "gmaj/errors.hpp"

namespace gmaj {

partition::partition(std::vector<long long> values, std::string name)
    : values_(std::move(values)) {
    for (std::size_t i = 0; i + 1 < values_.size(); ++i) {
        if (values_[i] < values_[i + 1])
            throw not_nonincreasing(
                name + " is not nonincreasing at index " + std::to_string(i + 1),
                static_cast<long long>(i + 1));
    }
}

long long partition::entry(long long i) const {
    if (i < 1 || i > size())
        throw length_mismatch("partition: entry index " + std::to_string(i) +
                              " out of range 1.." + std::to_string(size()));
    return values_[static_cast<std::size_t>(i - 1)];
}

ext_int partition::sum(long long lo, long long hi) const {
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
        acc += values_[static_cast<std::size_t>(i - 1)];
    return acc;
}

long long partition::total() const {
    ext_int acc = 0;
    for (long long v : values_) acc += v;
    return acc.value();
}

std::string partition::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) os << ',';
        os << values_[i];
    }
    os << ')';
    return os.str();
}

} // namespace gmaj
