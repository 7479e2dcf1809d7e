#include "gmaj/majorization.hpp"

#include "gmaj/errors.hpp"

namespace gmaj {

namespace {

void require_lengths(const partition& g, const partition& d, const partition& a) {
    if (g.size() != d.size() + a.size())
        throw length_mismatch("|g| = " + std::to_string(g.size()) +
                              " but |d| + |a| = " +
                              std::to_string(d.size() + a.size()));
}

std::optional<violation> interlacing_violation(const partition& g, const partition& d,
                                               long long s) {
    for (long long i = 1; i <= d.size(); ++i) {
        if (!(d.at(i) >= g.at(i + s)))
            return violation{"interlacing", i, d.at(i), g.at(i + s)};
    }
    return std::nullopt;
}

} // namespace

std::vector<long long> pivot_indices(const partition& d, const partition& g, long long s) {
    if (g.size() != d.size() + s)
        throw length_mismatch("pivot_indices: |g| must equal |d| + s");
    std::vector<long long> h;
    h.reserve(static_cast<std::size_t>(s));
    for (long long j = 1; j <= s; ++j) {
        long long hj = 0;
        for (long long i = 1; i <= g.size(); ++i) {
            if (d.at(i - j + 1) < g.at(i)) {
                hj = i;
                break;
            }
        }
        internal_check(hj != 0, "pivot index undefined despite sentinel tail");
        h.push_back(hj);
    }
    return h;
}

verdict check_exact(const partition& g, const partition& d, const partition& a) {
    require_lengths(g, d, a);
    const long long s = a.size();
    if (auto v = interlacing_violation(g, d, s))
        return {false, v};
    ext_int gsum = g.sum(1, g.size());
    ext_int target = d.sum(1, d.size()) + a.sum(1, s);
    if (!(gsum == target))
        return {false, violation{"total-sum", 0, gsum, target}};
    auto h = pivot_indices(d, g, s);
    for (long long j = 1; j <= s; ++j) {
        long long hj = h[static_cast<std::size_t>(j - 1)];
        ext_int lhs = g.sum(1, hj) - d.sum(1, hj - j);
        ext_int rhs = a.sum(1, j);
        if (!(lhs <= rhs))
            return {false, violation{"prefix-bound", j, lhs, rhs}};
    }
    return {true, std::nullopt};
}

verdict check_weak(const partition& g, const partition& d, const partition& a) {
    require_lengths(g, d, a);
    const long long s = a.size();
    if (auto v = interlacing_violation(g, d, s))
        return {false, v};
    ext_int gsum = g.sum(1, g.size());
    ext_int target = d.sum(1, d.size()) + a.sum(1, s);
    if (!(gsum >= target))
        return {false, violation{"total-sum", 0, gsum, target}};
    auto h = pivot_indices(d, g, s);
    for (long long j = 1; j <= s; ++j) {
        long long hj = h[static_cast<std::size_t>(j - 1)];
        ext_int lhs = g.sum(hj + 1, g.size());
        ext_int rhs = d.sum(hj - j + 1, d.size()) + a.sum(j + 1, s);
        if (!(lhs >= rhs))
            return {false, violation{"tail-bound", j, lhs, rhs}};
    }
    return {true, std::nullopt};
}

bool suffix_dominance(const partition& g, const partition& d, const partition& a,
                      long long u, long long j) {
    require_lengths(g, d, a);
    const long long s = a.size();
    if (j < 0 || j > s)
        throw index_out_of_band("j = " + std::to_string(j) + " outside 0.." +
                                std::to_string(s));
    auto h = pivot_indices(d, g, s);
    long long lo = (j == 0) ? 0 : h[static_cast<std::size_t>(j - 1)];
    long long hi = (j == s) ? g.size() + 1 : h[static_cast<std::size_t>(j)];
    if (!(lo < u && u <= hi))
        throw index_out_of_band("u = " + std::to_string(u) + " outside (" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
    ext_int lhs = g.sum(u, g.size());
    ext_int rhs = d.sum(u - j, d.size()) + a.sum(j + 1, s);
    return lhs >= rhs;
}

} // namespace gmaj
