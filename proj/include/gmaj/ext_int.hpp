#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "gmaj/errors.hpp"

namespace gmaj {

/// Integer extended with two sentinels: -inf < every finite value < +inf.
///
/// Out-of-range sequence indexing reads +inf before the start and -inf past
/// the end, which makes every inequality in the decision procedure total.
/// Adding +inf and -inf is a hard error, never a silent value.
class ext_int {
public:
    constexpr ext_int() = default;
    constexpr ext_int(long long v) : state_(state::finite), value_(v) {}

    static constexpr ext_int plus_infinity() { return ext_int(state::plus_inf); }
    static constexpr ext_int minus_infinity() { return ext_int(state::minus_inf); }

    constexpr bool finite() const { return state_ == state::finite; }
    constexpr bool is_plus_infinity() const { return state_ == state::plus_inf; }
    constexpr bool is_minus_infinity() const { return state_ == state::minus_inf; }

    long long value() const {
        if (!finite())
            throw arithmetic_error("ext_int: value() on an infinite value");
        return value_;
    }

    friend constexpr std::strong_ordering operator<=>(ext_int a, ext_int b) {
        if (a.rank() != b.rank())
            return a.rank() <=> b.rank();
        if (a.state_ == state::finite)
            return a.value_ <=> b.value_;
        return std::strong_ordering::equal;
    }
    friend constexpr bool operator==(ext_int a, ext_int b) {
        return (a <=> b) == std::strong_ordering::equal;
    }

    friend ext_int operator+(ext_int a, ext_int b) {
        if (a.finite() && b.finite()) {
            long long r;
            if (__builtin_add_overflow(a.value_, b.value_, &r))
                throw arithmetic_error("ext_int: 64-bit addition overflow");
            return ext_int(r);
        }
        if (a.finite()) return b;
        if (b.finite()) return a;
        if (a.state_ != b.state_)
            throw arithmetic_error("ext_int: (+inf) + (-inf) is undefined");
        return a;
    }

    friend ext_int operator-(ext_int a, ext_int b) { return a + (-b); }

    friend ext_int operator-(ext_int a) {
        switch (a.state_) {
        case state::plus_inf: return minus_infinity();
        case state::minus_inf: return plus_infinity();
        default:
            if (a.value_ == INT64_MIN)
                throw arithmetic_error("ext_int: negation overflow");
            return ext_int(-a.value_);
        }
    }

    ext_int& operator+=(ext_int b) { return *this = *this + b; }
    ext_int& operator-=(ext_int b) { return *this = *this - b; }

    std::string str() const {
        if (is_plus_infinity()) return "+inf";
        if (is_minus_infinity()) return "-inf";
        return std::to_string(value_);
    }

    friend std::ostream& operator<<(std::ostream& os, ext_int v) { return os << v.str(); }

private:
    enum class state : std::int8_t { minus_inf = -1, finite = 0, plus_inf = 1 };

    constexpr explicit ext_int(state s) : state_(s) {}
    constexpr int rank() const { return static_cast<int>(state_); }

    state state_ = state::finite;
    long long value_ = 0;
};

} // namespace gmaj
