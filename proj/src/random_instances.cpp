#include "gmaj/random_instances.hpp"

#include <algorithm>
#include <unordered_set>

#include "gmaj/errors.hpp"

namespace gmaj {

long long draw(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() %
               static_cast<unsigned long long>(hi - lo + 1));
}

namespace {

std::vector<long long> draw_values(std::mt19937_64& rng, long long len,
                                   const instance_gen_params& p) {
    std::vector<long long> v(static_cast<std::size_t>(len));
    for (auto& x : v) x = draw(rng, p.min_value, p.max_value);
    std::sort(v.begin(), v.end(), std::greater<long long>());
    return v;
}

} // namespace

instance random_instance(std::mt19937_64& rng, const instance_gen_params& params) {
    if (params.max_value - params.min_value < 1)
        throw precondition_violated(
            "value range must span at least two values for c/d disjointness");
    for (int attempt = 0; attempt < 10'000; ++attempt) {
        const long long m = draw(rng, 1, params.max_len);
        const long long n = draw(rng, 1, params.max_len);
        const long long s = draw(rng, 0, params.max_len);
        const long long k = m + s - n;
        if (k < 0 || k > params.max_len) continue;

        auto dv = draw_values(rng, m, params);
        auto cv = draw_values(rng, n, params);
        std::unordered_set<long long> dvals(dv.begin(), dv.end());
        bool clash = std::any_of(cv.begin(), cv.end(),
                                 [&dvals](long long v) { return dvals.count(v) > 0; });
        if (clash) continue;

        return instance(partition(draw_values(rng, s, params)),
                        partition(draw_values(rng, k, params)),
                        partition(std::move(cv)), partition(std::move(dv)));
    }
    throw precondition_violated("random instance generation kept rejecting; "
                                "widen the value range or shorten lengths");
}

} // namespace gmaj
