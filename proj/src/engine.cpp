#include "gmaj/engine.hpp"

#include <algorithm>

#include "gmaj/errors.hpp"
#include "gmaj/merged_sequence.hpp"

namespace gmaj {

namespace {

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw arithmetic_error("64-bit multiplication overflow");
    return r;
}

// Floor division / modulo; C++ '/' truncates toward zero.
long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

} // namespace

std::vector<condition_report> evaluate_conditions(const instance& inst,
                                                  const derived_tables& tb,
                                                  const sd_result& sd) {
    std::vector<condition_report> reports;
    const merged_sequence e = merge_union(inst.d, inst.a);
    const merged_sequence ep = merge_union(inst.c, inst.b);

    for (long long y = 1; y <= tb.h_prime; ++y) {
        condition_report r;
        r.side = condition_side::i;
        r.index = y;
        const long long ty = tb.t[static_cast<std::size_t>(y)];
        const long long my = tb.m[static_cast<std::size_t>(y)];
        const long long zy = tb.z[static_cast<std::size_t>(y)];
        r.triggered = ty <= my;
        r.lhs = e.sum(zy + ty, zy + my);
        ext_int rhs = 0;
        for (long long i = y; i <= tb.h_prime; ++i)
            rhs += sd.c_sel[static_cast<std::size_t>(i - 1)];
        for (long long i = zy + 1; i <= inst.m(); ++i)
            if (!sd.in_Delta(i)) rhs -= inst.d.entry(i);
        rhs -= inst.a.sum(my + 1, inst.s());
        r.rhs = rhs;
        r.satisfied = !r.triggered || r.lhs <= r.rhs;
        reports.push_back(r);
    }

    for (long long x = 1; x <= tb.h; ++x) {
        condition_report r;
        r.side = condition_side::ii;
        r.index = x;
        const long long tx = tb.tp[static_cast<std::size_t>(x)];
        const long long mx = tb.mp[static_cast<std::size_t>(x)];
        const long long zx = tb.zp[static_cast<std::size_t>(x)];
        r.triggered = tx <= mx;
        r.lhs = ep.sum(zx + tx, zx + mx);
        ext_int rhs = 0;
        for (long long i = x; i <= tb.h; ++i)
            rhs += sd.d_sel[static_cast<std::size_t>(i - 1)];
        for (long long i = zx + 1; i <= inst.n(); ++i)
            if (!sd.in_S(i)) rhs -= inst.c.entry(i);
        rhs -= inst.b.sum(mx + 1, inst.k());
        r.rhs = rhs;
        r.satisfied = !r.triggered || r.lhs <= r.rhs;
        reports.push_back(r);
    }
    return reports;
}

partition build_weak_witness(const instance& inst, const sd_result& sd,
                             const derived_tables& tb) {
    internal_check(tb.t0 >= 0, "witness pad length is negative");

    long long mx = std::max(inst.c.entry(1), inst.d.entry(1));
    if (!inst.a.empty()) mx = std::max(mx, inst.a.entry(1));
    if (!inst.b.empty()) mx = std::max(mx, inst.b.entry(1));
    const long long pad = mx + 1;

    std::vector<long long> vals;
    vals.reserve(static_cast<std::size_t>(inst.witness_len()));
    vals.insert(vals.end(), sd.c_sel.begin(), sd.c_sel.end());
    vals.insert(vals.end(), sd.d_sel.begin(), sd.d_sel.end());
    vals.insert(vals.end(), static_cast<std::size_t>(tb.t0), pad);
    std::sort(vals.begin(), vals.end(), std::greater<long long>());
    partition gbar(std::move(vals));
    internal_check(gbar.size() == inst.witness_len(), "witness length off");

    // The union form must agree with both closed forms of the construction.
    for (long long i = 1; i <= tb.t0; ++i)
        internal_check(gbar.at(i) == ext_int(pad), "pad prefix mismatch");
    for (long long x = 1; x <= tb.h_prime; ++x) {
        const long long at = tb.z[static_cast<std::size_t>(x)] + tb.t[static_cast<std::size_t>(x)];
        internal_check(gbar.at(at) == sd.c_sel_at(x), "closed form mismatch at a selected c rank");
    }
    for (long long x = 0; x <= tb.h_prime; ++x) {
        const long long lo = tb.z[static_cast<std::size_t>(x)] + tb.t[static_cast<std::size_t>(x)];
        const long long hi = tb.z[static_cast<std::size_t>(x + 1)] + tb.t[static_cast<std::size_t>(x + 1)];
        for (long long j = std::max(lo + 1, tb.t0 + 1); j < hi; ++j)
            internal_check(gbar.at(j) == inst.d.at(j - tb.t[static_cast<std::size_t>(x)]),
                           "closed form mismatch on a d stretch");
    }
    for (long long x = 1; x <= tb.h; ++x) {
        const long long at = tb.zp[static_cast<std::size_t>(x)] + tb.tp[static_cast<std::size_t>(x)];
        internal_check(gbar.at(at) == sd.d_sel_at(x), "closed form mismatch at a selected d rank");
    }
    for (long long x = 0; x <= tb.h; ++x) {
        const long long lo = tb.zp[static_cast<std::size_t>(x)] + tb.tp[static_cast<std::size_t>(x)];
        const long long hi = tb.zp[static_cast<std::size_t>(x + 1)] + tb.tp[static_cast<std::size_t>(x + 1)];
        for (long long j = std::max(lo + 1, tb.t0 + 1); j < hi; ++j)
            internal_check(gbar.at(j) == inst.c.at(j - tb.tp[static_cast<std::size_t>(x)]),
                           "closed form mismatch on a c stretch");
    }

    // Selected values must cover everything the two tails will ask for.
    ext_int csel_sum = 0;
    for (long long v : sd.c_sel) csel_sum += v;
    ext_int rest_d = 0;
    for (long long i = 1; i <= inst.m(); ++i)
        if (!sd.in_Delta(i)) rest_d += inst.d.entry(i);
    internal_check(csel_sum >= rest_d + inst.a.sum(tb.t0 + 1, inst.s()),
                   "selected c values cannot cover the unselected d tail");
    ext_int dsel_sum = 0;
    for (long long v : sd.d_sel) dsel_sum += v;
    ext_int rest_c = 0;
    for (long long i = 1; i <= inst.n(); ++i)
        if (!sd.in_S(i)) rest_c += inst.c.entry(i);
    internal_check(dsel_sum >= rest_c + inst.b.sum(tb.t0 + 1, inst.k()),
                   "selected d values cannot cover the unselected c tail");

    return gbar;
}

std::pair<partition, homogenization_record>
homogenize(const partition& gbar, const partition& d, const partition& a) {
    if (gbar.size() != d.size() + a.size())
        throw length_mismatch("homogenize: |gbar| must equal |d| + |a|");
    const long long len = gbar.size();
    const long long target = (d.sum(1, d.size()) + a.sum(1, a.size())).value();
    const long long omega = gbar.total() - target;
    if (omega < 0)
        throw negative_omega("witness sum is " + std::to_string(-omega) +
                             " below the target");

    homogenization_record rec;
    rec.omega = omega;
    if (omega == 0) {
        rec.f = 1;
        return {gbar, rec};
    }

    // Smallest prefix that can absorb the surplus when flattened to the level
    // of its last entry. Reading the scan past the end (level -inf) makes the
    // saving infinite, so f = len + 1 flattens the whole sequence down to the
    // most homogeneous partition of the target sum.
    long long f = len + 1;
    ext_int prefix = 0;
    for (long long i = 1; i <= len; ++i) {
        prefix += gbar.entry(i);
        if (prefix.value() - checked_mul(i, gbar.entry(i)) >= omega) {
            f = i;
            break;
        }
    }
    if (f <= 1 || len == 0)
        throw infeasible_homogenization("no prefix length can absorb the surplus");
    rec.f = f;

    const long long total = (gbar.sum(1, f - 1) - ext_int(omega)).value();
    rec.prefix_total = total;
    const long long parts = f - 1;
    const long long base = floor_div(total, parts);
    const long long rem = total - checked_mul(base, parts); // 0 <= rem < parts
    std::vector<long long> vals;
    vals.reserve(static_cast<std::size_t>(len));
    for (long long i = 0; i < parts; ++i)
        vals.push_back(i < rem ? base + 1 : base);
    internal_check(gbar.at(f - 1) >= ext_int(vals.front()), "flattened prefix overshoots");
    internal_check(ext_int(vals.back()) >= gbar.at(f), "flattened prefix undershoots");
    rec.prefix = partition(vals);
    for (long long i = f; i <= len; ++i)
        vals.push_back(gbar.entry(i));

    partition g(std::move(vals));
    internal_check(g.total() == target, "flattening changed the total incorrectly");
    return {g, rec};
}

namespace {

certificate decide(const instance& inst, run_mode mode) {
    certificate cert;
    cert.mode = mode;
    cert.sd = classify(inst);
    cert.tables = compute_tables(inst, cert.sd);
    cert.reports = evaluate_conditions(inst, cert.tables, cert.sd);

    bool conditions_ok = std::all_of(cert.reports.begin(), cert.reports.end(),
                                     [](const condition_report& r) { return r.satisfied; });
    bool ok = conditions_ok;
    if (mode == run_mode::exact) {
        sum_check_result sc;
        sc.lhs = (inst.c.sum(1, inst.n()) + inst.b.sum(1, inst.k())).value();
        sc.rhs = (inst.d.sum(1, inst.m()) + inst.a.sum(1, inst.s())).value();
        sc.equal = sc.lhs == sc.rhs;
        cert.sums = sc;
        ok = ok && sc.equal;
    }
    cert.exists = ok;
    if (!ok) return cert;

    partition w = build_weak_witness(inst, cert.sd, cert.tables);
    if (mode == run_mode::exact)
        w = homogenize(w, inst.d, inst.a).first;

    verdict va = (mode == run_mode::weak) ? check_weak(w, inst.d, inst.a)
                                          : check_exact(w, inst.d, inst.a);
    verdict vb = (mode == run_mode::weak) ? check_weak(w, inst.c, inst.b)
                                          : check_exact(w, inst.c, inst.b);
    internal_check(va.holds, "constructed witness fails against (d, a)");
    internal_check(vb.holds, "constructed witness fails against (c, b)");
    cert.witness = std::move(w);
    cert.verification = std::make_pair(std::move(va), std::move(vb));
    return cert;
}

} // namespace

certificate decide_weak(const instance& inst) { return decide(inst, run_mode::weak); }

certificate decide_exact(const instance& inst) { return decide(inst, run_mode::exact); }

} // namespace gmaj
