#include "gmaj/tables.hpp"

#include "gmaj/errors.hpp"

namespace gmaj {

derived_tables compute_tables(const instance& inst, const sd_result& sd) {
    derived_tables tb;
    tb.h = static_cast<long long>(sd.Delta.size());
    tb.h_prime = static_cast<long long>(sd.S.size());

    const long long s = inst.s(), k = inst.k();

    tb.m.resize(static_cast<std::size_t>(tb.h_prime) + 2);
    tb.t.resize(static_cast<std::size_t>(tb.h_prime) + 2);
    tb.z.resize(static_cast<std::size_t>(tb.h_prime) + 2);
    tb.w.resize(static_cast<std::size_t>(tb.h_prime) + 1);
    for (long long y = 0; y <= tb.h_prime + 1; ++y) {
        const ext_int cy = sd.c_sel_at(y);
        long long m_cnt = 0, out_below = 0, z_cnt = 0;
        for (long long i = 1; i <= inst.s(); ++i)
            if (ext_int(inst.a.entry(i)) > cy) ++m_cnt;
        for (long long i = 1; i <= inst.m(); ++i) {
            const ext_int di = inst.d.entry(i);
            if (di > cy) ++z_cnt;
            if (di < cy && !sd.in_Delta(i)) ++out_below;
        }
        tb.m[static_cast<std::size_t>(y)] = m_cnt;
        tb.t[static_cast<std::size_t>(y)] = s - (tb.h_prime - y) + out_below;
        tb.z[static_cast<std::size_t>(y)] = z_cnt;
    }
    for (long long y = 0; y <= tb.h_prime; ++y) {
        const ext_int hi = sd.c_sel_at(y), lo = sd.c_sel_at(y + 1);
        long long cnt = 0;
        for (long long i = 1; i <= inst.m(); ++i) {
            const ext_int di = inst.d.entry(i);
            if (hi > di && di > lo && !sd.in_Delta(i)) ++cnt;
        }
        tb.w[static_cast<std::size_t>(y)] = cnt;
    }

    tb.mp.resize(static_cast<std::size_t>(tb.h) + 2);
    tb.tp.resize(static_cast<std::size_t>(tb.h) + 2);
    tb.zp.resize(static_cast<std::size_t>(tb.h) + 2);
    tb.wp.resize(static_cast<std::size_t>(tb.h) + 1);
    for (long long x = 0; x <= tb.h + 1; ++x) {
        const ext_int dx = sd.d_sel_at(x);
        long long m_cnt = 0, out_below = 0, z_cnt = 0;
        for (long long i = 1; i <= inst.k(); ++i)
            if (ext_int(inst.b.entry(i)) > dx) ++m_cnt;
        for (long long i = 1; i <= inst.n(); ++i) {
            const ext_int ci = inst.c.entry(i);
            if (ci > dx) ++z_cnt;
            if (ci < dx && !sd.in_S(i)) ++out_below;
        }
        tb.mp[static_cast<std::size_t>(x)] = m_cnt;
        tb.tp[static_cast<std::size_t>(x)] = k - (tb.h - x) + out_below;
        tb.zp[static_cast<std::size_t>(x)] = z_cnt;
    }
    for (long long x = 0; x <= tb.h; ++x) {
        const ext_int hi = sd.d_sel_at(x), lo = sd.d_sel_at(x + 1);
        long long cnt = 0;
        for (long long i = 1; i <= inst.n(); ++i) {
            const ext_int ci = inst.c.entry(i);
            if (hi > ci && ci > lo && !sd.in_S(i)) ++cnt;
        }
        tb.wp[static_cast<std::size_t>(x)] = cnt;
    }

    tb.t0 = tb.t[0];
    internal_check(tb.t[0] == tb.tp[0], "padding lengths disagree between the two sides");
    return tb;
}

} // namespace gmaj
