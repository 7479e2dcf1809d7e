#include "gmaj/classify.hpp"

#include <algorithm>

#include "gmaj/errors.hpp"
#include "gmaj/merged_sequence.hpp"

namespace gmaj {

bool sd_result::in_S(long long j) const {
    return std::binary_search(S.begin(), S.end(), j);
}

bool sd_result::in_Delta(long long j) const {
    return std::binary_search(Delta.begin(), Delta.end(), j);
}

ext_int sd_result::c_sel_at(long long rank) const {
    if (rank <= 0) return ext_int::plus_infinity();
    if (rank > static_cast<long long>(c_sel.size())) return ext_int::minus_infinity();
    return c_sel[static_cast<std::size_t>(rank - 1)];
}

ext_int sd_result::d_sel_at(long long rank) const {
    if (rank <= 0) return ext_int::plus_infinity();
    if (rank > static_cast<long long>(d_sel.size())) return ext_int::minus_infinity();
    return d_sel[static_cast<std::size_t>(rank - 1)];
}

namespace {

// One orientation of the selection step. For a d element: own = d, other = c,
// tail = a, window = the merged sequence of d and a, bound = s, and own
// membership means "in Delta". The c orientation swaps all roles.
struct side_view {
    const partition& own;
    const partition& other;
    const partition& tail;
    const merged_sequence& window;
    long long bound;
    std::vector<char>& own_in;
    std::vector<char>& own_decided;
    std::vector<char>& other_in;
    std::vector<char>& other_decided;
};

decision_trace_entry process_element(side_view sv, element_origin origin, long long j) {
    const long long vj = sv.own.entry(j);

    // Everything counted below must already be decided; the processing order
    // (ascending value, largest index first within a list) guarantees it.
    long long below_in = 0;
    for (long long i = 1; i <= sv.other.size(); ++i) {
        if (sv.other.entry(i) < vj) {
            internal_check(sv.other_decided[static_cast<std::size_t>(i)],
                           "selection consulted an undecided opposite entry");
            if (sv.other_in[static_cast<std::size_t>(i)]) ++below_in;
        }
    }
    long long above_out = 0;
    for (long long i = j + 1; i <= sv.own.size(); ++i) {
        internal_check(sv.own_decided[static_cast<std::size_t>(i)],
                       "selection consulted an undecided same-list entry");
        if (!sv.own_in[static_cast<std::size_t>(i)]) ++above_out;
    }

    const long long q = sv.bound - below_in + above_out + 1;

    decision_trace_entry entry;
    entry.origin = origin;
    entry.index = j;
    entry.value = vj;
    entry.q = q;
    entry.snapshot.in_set_below = below_in;
    entry.snapshot.not_in_set_above = above_out;

    if (q > sv.bound) {
        entry.branch = decision_branch::q_exceeds;
        entry.member = true;
        return entry;
    }

    // q <= bound forces at least one chosen opposite entry strictly below.
    long long l = 0;
    for (long long i = 1; i <= sv.other.size(); ++i) {
        if (sv.other_in[static_cast<std::size_t>(i)] && sv.other.entry(i) < vj) {
            l = i;
            break;
        }
    }
    internal_check(l != 0, "no chosen opposite entry below the current value");
    const long long threshold = sv.other.entry(l);

    long long tail_above = 0;
    for (long long i = 1; i <= sv.tail.size(); ++i)
        if (sv.tail.entry(i) > threshold) ++tail_above;
    long long chosen_after = 0;
    for (long long i = l + 1; i <= sv.other.size(); ++i) {
        internal_check(sv.other_decided[static_cast<std::size_t>(i)],
                       "selection consulted an undecided opposite entry");
        if (sv.other_in[static_cast<std::size_t>(i)]) ++chosen_after;
    }
    long long out_below = 0;
    for (long long i = 1; i <= sv.own.size(); ++i) {
        if (sv.own.entry(i) < threshold) {
            internal_check(sv.own_decided[static_cast<std::size_t>(i)],
                           "selection consulted an undecided same-list entry");
            if (!sv.own_in[static_cast<std::size_t>(i)]) ++out_below;
        }
    }

    const long long window = tail_above - (sv.bound - chosen_after + out_below) + 1;
    entry.snapshot.window = window;

    bool accepted = false;
    if (window >= 1) {
        // The occurrence of this element must sit among the `window` smallest
        // entries of the merged own+tail sequence strictly above the threshold.
        const long long segment = sv.window.count_greater(threshold);
        const long long pos = sv.window.position_of(merge_origin::base, j);
        internal_check(pos <= segment, "element occurrence fell outside its segment");
        accepted = pos > segment - window;
    }
    if (accepted) {
        entry.branch = decision_branch::part_a_accepted;
        entry.member = false;
        return entry;
    }

    ext_int lhs = 0;
    for (long long i = 1; i <= sv.other.size(); ++i)
        if (sv.other_in[static_cast<std::size_t>(i)] && sv.other.entry(i) < vj)
            lhs += sv.other.entry(i);
    ext_int rhs = vj;
    for (long long i = j + 1; i <= sv.own.size(); ++i)
        if (!sv.own_in[static_cast<std::size_t>(i)]) rhs += sv.own.entry(i);
    rhs += sv.tail.sum(q + 1, sv.bound);

    if (lhs >= rhs) {
        entry.branch = decision_branch::part_b_passed;
        entry.member = false;
    } else {
        entry.branch = decision_branch::part_b_failed;
        entry.member = true;
    }
    return entry;
}

} // namespace

sd_result classify(const instance& inst) {
    const merged_sequence u = merge_union(inst.c, inst.d);
    const merged_sequence e = merge_union(inst.d, inst.a);
    const merged_sequence ep = merge_union(inst.c, inst.b);

    std::vector<char> in_S(static_cast<std::size_t>(inst.n()) + 1, 0);
    std::vector<char> in_Delta(static_cast<std::size_t>(inst.m()) + 1, 0);
    std::vector<char> dec_c(static_cast<std::size_t>(inst.n()) + 1, 0);
    std::vector<char> dec_d(static_cast<std::size_t>(inst.m()) + 1, 0);

    sd_result out;
    out.trace.reserve(static_cast<std::size_t>(u.size()));

    // Reversing the nonincreasing merge yields ascending values with
    // larger indices first among equals, which is the processing order.
    for (auto it = u.entries().rbegin(); it != u.entries().rend(); ++it) {
        if (it->origin == merge_origin::added) { // a d entry
            side_view sv{inst.d, inst.c, inst.a, e, inst.s(),
                         in_Delta, dec_d, in_S, dec_c};
            auto entry = process_element(sv, element_origin::d_list, it->original_index);
            in_Delta[static_cast<std::size_t>(it->original_index)] = entry.member;
            dec_d[static_cast<std::size_t>(it->original_index)] = 1;
            out.trace.push_back(std::move(entry));
        } else { // a c entry
            side_view sv{inst.c, inst.d, inst.b, ep, inst.k(),
                         in_S, dec_c, in_Delta, dec_d};
            auto entry = process_element(sv, element_origin::c_list, it->original_index);
            in_S[static_cast<std::size_t>(it->original_index)] = entry.member;
            dec_c[static_cast<std::size_t>(it->original_index)] = 1;
            out.trace.push_back(std::move(entry));
        }
    }

    for (long long i = 1; i <= inst.n(); ++i)
        if (in_S[static_cast<std::size_t>(i)]) {
            out.S.push_back(i);
            out.c_sel.push_back(inst.c.entry(i));
        }
    for (long long i = 1; i <= inst.m(); ++i)
        if (in_Delta[static_cast<std::size_t>(i)]) {
            out.Delta.push_back(i);
            out.d_sel.push_back(inst.d.entry(i));
        }
    return out;
}

} // namespace gmaj
