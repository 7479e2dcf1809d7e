#include "gmaj/instance.hpp"

#include <sstream>
#include <unordered_set>

#include "gmaj/errors.hpp"

namespace gmaj {

instance::instance(partition a_, partition b_, partition c_, partition d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (d.empty())
        throw precondition_violated("d must be nonempty");
    if (c.empty())
        throw precondition_violated("c must be nonempty");
    if (m() + s() != n() + k()) {
        std::ostringstream os;
        os << "length constraint |d|+|a| = |c|+|b| violated: " << m() << "+" << s()
           << " != " << n() << "+" << k();
        throw precondition_violated(os.str());
    }
    std::unordered_set<long long> dvals(d.values().begin(), d.values().end());
    for (long long v : c.values()) {
        if (dvals.count(v))
            throw precondition_violated("c and d share value " + std::to_string(v));
    }
}

std::string instance::str() const {
    return "a=" + a.str() + " b=" + b.str() + " c=" + c.str() + " d=" + d.str();
}

} // namespace gmaj
