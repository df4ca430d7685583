#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>

#include "leapidx/errors.hpp"
#include "leapidx/exact.hpp"
#include "leapidx/indices.hpp"
#include "leapidx/radical.hpp"

namespace leapidx {

enum class Family { Zigzag, Rhombic };

inline constexpr std::string_view family_token(Family family) {
    return family == Family::Zigzag ? "zigzag" : "rhombic";
}

inline std::optional<Family> family_from_token(std::string_view token) {
    if (token == "zigzag") return Family::Zigzag;
    if (token == "rhombic") return Family::Rhombic;
    return std::nullopt;
}

// Closed-form result: exact integer, or an exact radical for the LSO forms.
class ClosedValue {
public:
    static ClosedValue exact(wide_int v) {
        ClosedValue out;
        out.integer_ = v;
        return out;
    }
    static ClosedValue surd(Radical r) {
        ClosedValue out;
        out.radical_ = true;
        out.surd_ = r;
        return out;
    }

    bool is_exact() const { return !radical_; }
    wide_int as_integer() const {
        if (radical_) throw UnknownKind("radical value has no exact integer form");
        return integer_;
    }
    const Radical& radical() const {
        if (!radical_) throw UnknownKind("integer value has no radical form");
        return surd_;
    }
    double as_double() const { return radical_ ? surd_.value() : to_double(integer_); }
    std::string to_string() const { return radical_ ? surd_.to_string() : to_decimal(integer_); }

    // Set on LYCO: the published formulas are the theorems' (p-1) variant, not
    // the (n-1) definition.
    std::string note;

private:
    bool radical_ = false;
    wide_int integer_ = 0;
    Radical surd_;
};

namespace detail {

inline wide_int poly_in_p(long p, std::initializer_list<long long> coeffs_descending) {
    wide_int acc = 0;
    for (const long long c : coeffs_descending) acc = checked_add(checked_mul(acc, p), c);
    return acc;
}

inline void require_family_p(long p) {
    if (p < 2) throw InvalidParameter("closed forms are stated for p >= 2");
}

} // namespace detail

// Published symbolic edge partitions instantiated at p; zero-frequency
// classes are dropped (the rhombic (4,4) class is empty at p = 2).
inline EdgePartition closed_partition(Family family, long p) {
    detail::require_family_p(p);
    EdgePartition partition;
    partition.k = 2;
    const auto put = [&partition](std::uint32_t a, std::uint32_t b, long long count) {
        if (count > 0) partition.classes[{a, b}] = static_cast<std::uint64_t>(count);
    };
    if (family == Family::Zigzag) {
        put(2, 2, 2);
        put(2, 3, 4);
        put(3, 3, 2 * (p - 1));
        put(3, 4, 4);
        put(3, 5, 4 * (p - 1));
        put(4, 5, p);
        put(5, 5, 3 * (p - 1));
    } else {
        put(2, 3, 4);
        put(3, 3, 2);
        put(3, 4, 8);
        put(4, 4, 8 * (p - 2));
        put(4, 6, 4 * (p - 1));
        put(6, 6, (p - 1) * (p - 1) + 2 * (p - 1) * (p - 2));
    }
    return partition;
}

// Published closed-form index expressions, evaluated exactly as printed.
// The LSO forms stay exact as radicals. Note that for the zigzag family the
// printed HLM1/HLM2 lines disagree with their own edge partition by -50/-72
// (a derivation slip reproduced here verbatim); the verify layer surfaces it.
inline ClosedValue closed_index(Family family, long p, IndexKind kind) {
    detail::require_family_p(p);
    if (family == Family::Zigzag) {
        switch (kind) {
            case IndexKind::LM1: return ClosedValue::exact(detail::poly_in_p(p, {83, -18}));
            case IndexKind::LM2: return ClosedValue::exact(detail::poly_in_p(p, {173, -73}));
            case IndexKind::HLM1: return ClosedValue::exact(detail::poly_in_p(p, {709, -350}));
            case IndexKind::HLM2: return ClosedValue::exact(detail::poly_in_p(p, {3337, -2257}));
            case IndexKind::LF: return ClosedValue::exact(detail::poly_in_p(p, {363, -154}));
            case IndexKind::HLF: return ClosedValue::exact(detail::poly_in_p(p, {14453, -9468}));
            case IndexKind::LY: return ClosedValue::exact(detail::poly_in_p(p, {1655, -930}));
            case IndexKind::LYCO: {
                auto out = ClosedValue::exact(detail::poly_in_p(p, {-1292, 2068, -776}));
                out.note = "(p-1) theorem variant";
                return out;
            }
            case IndexKind::LSO: {
                Radical r;
                r.add(1, 3 * p + 4);
                r.add(2, 8 * (p - 1));
                r.add(5, 4);
                r.add(6, 2 * (p - 1));
                r.add(7, 4);
                r.add(10, 3 * (p - 1));
                return ClosedValue::surd(r);
            }
            default: break;
        }
    } else {
        switch (kind) {
            case IndexKind::LM1: return ClosedValue::exact(detail::poly_in_p(p, {36, 8, -20}));
            case IndexKind::LM2: return ClosedValue::exact(detail::poly_in_p(p, {108, -64, -34}));
            case IndexKind::HLM1: return ClosedValue::exact(detail::poly_in_p(p, {432, -240, -140}));
            case IndexKind::HLM2: return ClosedValue::exact(detail::poly_in_p(p, {3888, -6016, 1538}));
            case IndexKind::LF: return ClosedValue::exact(detail::poly_in_p(p, {216, -112, -72}));
            case IndexKind::HLF: return ClosedValue::exact(detail::poly_in_p(p, {15552, -22464, 5044}));
            case IndexKind::LY: return ClosedValue::exact(detail::poly_in_p(p, {1296, -1312, -32}));
            case IndexKind::LYCO: {
                auto out = ClosedValue::exact(detail::poly_in_p(p, {-1080, 2280, -1160, -40}));
                out.note = "(p-1) theorem variant";
                return out;
            }
            case IndexKind::LSO: {
                Radical r;
                r.add(3, 6 * p * p - 16 * p + 10);
                r.add(2, 16 * p - 32);
                r.add(10, 4 * p - 4);
                r.add(5, 4);
                r.add(6, 2);
                r.add(7, 8);
                return ClosedValue::surd(r);
            }
            default: break;
        }
    }
    throw UnknownKind("no closed form for kind: " + std::string(to_token(kind)));
}

// Published polynomials; identical to applying the polynomial functor to the
// published partition, so they are generated that way.
inline IndexPolynomial closed_polynomial(Family family, long p, IndexKind kind) {
    return polynomial_from_partition(closed_partition(family, p), kind);
}

} // namespace leapidx
