#include "gmaj/oracle.hpp"

#include <algorithm>

#include "gmaj/errors.hpp"

namespace gmaj {

namespace {

long long min_entry(const partition& p, long long acc) {
    for (long long v : p.values()) acc = std::min(acc, v);
    return acc;
}

long long max_entry(const partition& p, long long acc) {
    for (long long v : p.values()) acc = std::max(acc, v);
    return acc;
}

// Steps a nonincreasing sequence to its descending-lex successor within
// [lo, hi]; returns false from the all-lo sequence.
bool next_candidate(std::vector<long long>& g, long long lo) {
    auto it = std::find_if(g.rbegin(), g.rend(),
                           [lo](long long v) { return v > lo; });
    if (it == g.rend()) return false;
    --*it;
    std::fill(g.rbegin(), it, *it);
    return true;
}

template <typename Accept>
oracle_outcome search(const instance& inst, const search_bounds& bounds, Accept accept) {
    oracle_outcome out;
    if (bounds.lo > bounds.hi)
        throw precondition_violated("search bounds: lo > hi");
    const auto len = static_cast<std::size_t>(inst.witness_len());
    std::vector<long long> g(len, bounds.hi);
    for (;;) {
        if (out.candidates_checked == bounds.max_candidates) {
            out.exhausted = false;
            return out;
        }
        ++out.candidates_checked;
        if (accept(g)) {
            out.found = partition(g);
            out.exhausted = true;
            return out;
        }
        if (!next_candidate(g, bounds.lo)) {
            out.exhausted = true;
            return out;
        }
    }
}

} // namespace

search_bounds default_bounds(const instance& inst) {
    long long lo = inst.c.entry(1), hi = lo;
    for (const partition* p : {&inst.a, &inst.b, &inst.c, &inst.d}) {
        lo = min_entry(*p, lo);
        hi = max_entry(*p, hi);
    }
    return {lo - 1, hi + 1, 10'000'000};
}

oracle_outcome enumerate_weak(const instance& inst, const search_bounds& bounds) {
    return search(inst, bounds, [&inst](const std::vector<long long>& vals) {
        partition g{vals};
        return check_weak(g, inst.d, inst.a).holds &&
               check_weak(g, inst.c, inst.b).holds;
    });
}

oracle_outcome enumerate_exact(const instance& inst, const search_bounds& bounds) {
    const long long target =
        (inst.d.sum(1, inst.m()) + inst.a.sum(1, inst.s())).value();
    return search(inst, bounds, [&inst, target](const std::vector<long long>& vals) {
        ext_int total = 0;
        for (long long v : vals) total += v;
        if (!(total == ext_int(target))) return false;
        partition g{vals};
        return check_exact(g, inst.d, inst.a).holds &&
               check_exact(g, inst.c, inst.b).holds;
    });
}

agreement_report differential_check(const instance& inst, const search_bounds& bounds) {
    agreement_report rep;
    rep.weak_engine = decide_weak(inst);
    rep.exact_engine = decide_exact(inst);
    rep.weak_oracle = enumerate_weak(inst, bounds);
    rep.exact_oracle = enumerate_exact(inst, bounds);

    rep.weak_conclusive = rep.weak_oracle.found.has_value() || rep.weak_oracle.exhausted;
    rep.exact_conclusive = rep.exact_oracle.found.has_value() || rep.exact_oracle.exhausted;
    rep.weak_agree = !rep.weak_conclusive ||
                     rep.weak_engine.exists == rep.weak_oracle.found.has_value();
    rep.exact_agree = !rep.exact_conclusive ||
                      rep.exact_engine.exists == rep.exact_oracle.found.has_value();
    return rep;
}

} // namespace gmaj
