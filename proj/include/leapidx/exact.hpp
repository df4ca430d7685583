#pragma once

#include <cstdint>
#include <string>

#include "leapidx/errors.hpp"

namespace leapidx {

// Index sums like HLM2 grow past 64 bits long before the graphs stop being
// interesting, so all integer-valued accumulation happens in 128 bits with
// explicit overflow checks. Overflow throws; it never wraps.
using wide_int = __int128;

inline wide_int checked_add(wide_int a, wide_int b) {
    wide_int out;
    if (__builtin_add_overflow(a, b, &out)) throw Overflow("integer overflow in addition");
    return out;
}

inline wide_int checked_sub(wide_int a, wide_int b) {
    wide_int out;
    if (__builtin_sub_overflow(a, b, &out)) throw Overflow("integer overflow in subtraction");
    return out;
}

inline wide_int checked_mul(wide_int a, wide_int b) {
    wide_int out;
    if (__builtin_mul_overflow(a, b, &out)) throw Overflow("integer overflow in multiplication");
    return out;
}

inline std::string to_decimal(wide_int v) {
    if (v == 0) return "0";
    const bool negative = v < 0;
    std::string digits;
    // Negate digit by digit so wide_int's own minimum stays representable.
    while (v != 0) {
        int d = static_cast<int>(v % 10);
        if (d < 0) d = -d;
        digits.push_back(static_cast<char>('0' + d));
        v /= 10;
    }
    if (negative) digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
}

inline double to_double(wide_int v) {
    return static_cast<double>(v);
}

// Exact rational over wide_int; normalized so den > 0 and gcd(num, den) == 1.
// Arithmetic that would exceed 128 bits throws Overflow.
class Rational {
public:
    Rational() = default;
    Rational(wide_int numerator, wide_int denominator = 1) : num_(numerator), den_(denominator) {
        if (den_ == 0) throw InvalidParameter("rational with zero denominator");
        normalize();
    }

    wide_int num() const { return num_; }
    wide_int den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    double as_double() const { return to_double(num_) / to_double(den_); }

    Rational operator+(const Rational& o) const {
        const wide_int g = gcd(den_, o.den_);
        const wide_int scale = o.den_ / g;
        const wide_int lhs = checked_mul(num_, scale);
        const wide_int rhs = checked_mul(o.num_, den_ / g);
        return {checked_add(lhs, rhs), checked_mul(den_, scale)};
    }

    Rational operator*(const Rational& o) const {
        // Cross-reduce first; keeps intermediates as small as possible.
        const wide_int g1 = gcd(abs_of(num_), o.den_);
        const wide_int g2 = gcd(abs_of(o.num_), den_);
        return {checked_mul(num_ / g1, o.num_ / g2), checked_mul(den_ / g2, o.den_ / g1)};
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const {
        if (den_ == 1) return to_decimal(num_);
        return to_decimal(num_) + "/" + to_decimal(den_);
    }

private:
    static wide_int abs_of(wide_int v) { return v < 0 ? -v : v; }

    static wide_int gcd(wide_int a, wide_int b) {
        a = abs_of(a);
        b = abs_of(b);
        while (b != 0) {
            const wide_int t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const wide_int g = gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    wide_int num_ = 0;
    wide_int den_ = 1;
};

} // namespace leapidx
