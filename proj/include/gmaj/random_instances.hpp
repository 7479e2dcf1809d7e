#pragma once

#include <cstdint>
#include <random>

#include "gmaj/instance.hpp"

namespace gmaj {

struct instance_gen_params {
    long long max_len = 5;  // upper bound for all four lengths
    long long min_value = -3;
    long long max_value = 6;
};

/// Uniform draw via modulo on the raw engine output. Bias is irrelevant here
/// and, unlike std::uniform_int_distribution, the result is identical across
/// standard libraries for a fixed seed.
long long draw(std::mt19937_64& rng, long long lo, long long hi);

/// Random valid instance: lengths |d|, |c| in 1..max_len and |a|, |b| in
/// 0..max_len with |d|+|a| = |c|+|b|, entries in [min_value, max_value],
/// c and d value-disjoint (by rejection).
instance random_instance(std::mt19937_64& rng, const instance_gen_params& params);

} // namespace gmaj
