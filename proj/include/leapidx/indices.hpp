#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leapidx/errors.hpp"
#include "leapidx/exact.hpp"
#include "leapidx/graph.hpp"
#include "leapidx/k_degree.hpp"

namespace leapidx {

// Every kind maps to one edge functor over the endpoint k-degrees (a, b), or
// to one coindex rule. The classical names are the same functors, meant to be
// evaluated on a k=1 profile; SO alone differs from LSO in functor shape
// (sqrt(a^2+b^2) vs the leap form's sqrt(a+b)), and HM2CO sums over
// non-adjacent vertex pairs instead of edges.
enum class IndexKind {
    LM1,  // a + b
    LM2,  // a * b
    HLM1, // (a + b)^2
    HLM2, // (a * b)^2
    LSO,  // sqrt(a + b)
    LF,   // a^2 + b^2
    HLF,  // (a^2 + b^2)^2
    LY,   // a^3 + b^3
    LYCO, // (n - 1) * LF - LY
    M1,
    M2,
    F,
    HF,
    Y,
    YCO,
    SO,   // sqrt(a^2 + b^2)
    HM2,
    HM2CO // sum of a^2 b^2 over unordered non-adjacent distinct pairs
};

inline constexpr std::string_view to_token(IndexKind kind) {
    switch (kind) {
        case IndexKind::LM1: return "lm1";
        case IndexKind::LM2: return "lm2";
        case IndexKind::HLM1: return "hlm1";
        case IndexKind::HLM2: return "hlm2";
        case IndexKind::LSO: return "lso";
        case IndexKind::LF: return "lf";
        case IndexKind::HLF: return "hlf";
        case IndexKind::LY: return "ly";
        case IndexKind::LYCO: return "lyco";
        case IndexKind::M1: return "m1";
        case IndexKind::M2: return "m2";
        case IndexKind::F: return "f";
        case IndexKind::HF: return "hf";
        case IndexKind::Y: return "y";
        case IndexKind::YCO: return "yco";
        case IndexKind::SO: return "so";
        case IndexKind::HM2: return "hm2";
        case IndexKind::HM2CO: return "hm2co";
    }
    return "?";
}

inline const std::vector<IndexKind>& all_kinds() {
    static const std::vector<IndexKind> kinds = {
        IndexKind::LM1, IndexKind::LM2,  IndexKind::HLM1, IndexKind::HLM2, IndexKind::LSO,
        IndexKind::LF,  IndexKind::HLF,  IndexKind::LY,   IndexKind::LYCO, IndexKind::M1,
        IndexKind::M2,  IndexKind::F,    IndexKind::HF,   IndexKind::Y,    IndexKind::YCO,
        IndexKind::SO,  IndexKind::HM2,  IndexKind::HM2CO};
    return kinds;
}

// The nine leap quantities, in the order the reference tables list them.
inline const std::vector<IndexKind>& leap_kinds() {
    static const std::vector<IndexKind> kinds = {
        IndexKind::LM1, IndexKind::LM2, IndexKind::HLM1, IndexKind::HLM2, IndexKind::LSO,
        IndexKind::LF,  IndexKind::HLF, IndexKind::LY,   IndexKind::LYCO};
    return kinds;
}

inline std::optional<IndexKind> kind_from_token(std::string_view token) {
    for (const IndexKind kind : all_kinds())
        if (to_token(kind) == token) return kind;
    return std::nullopt;
}

inline constexpr bool real_valued(IndexKind kind) {
    return kind == IndexKind::LSO || kind == IndexKind::SO;
}

// Exact integer for every kind except LSO/SO, which are real sums of square
// roots.
class IndexValue {
public:
    static IndexValue exact(wide_int v) {
        IndexValue out;
        out.integer_ = v;
        return out;
    }
    static IndexValue approx(double v) {
        IndexValue out;
        out.real_ = true;
        out.value_ = v;
        return out;
    }

    bool is_exact() const { return !real_; }
    wide_int as_integer() const {
        if (real_) throw UnknownKind("real-valued index has no exact integer form");
        return integer_;
    }
    double as_double() const { return real_ ? value_ : to_double(integer_); }

    std::string to_string() const { return real_ ? format_real(value_) : to_decimal(integer_); }

    static std::string format_real(double v) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6g", v);
        return buf;
    }

private:
    bool real_ = false;
    wide_int integer_ = 0;
    double value_ = 0.0;
};

// Frequency map from unordered endpoint k-degree pairs (a <= b) to edge
// counts; the classes partition the edge set, so frequencies sum to m.
struct EdgePartition {
    unsigned k = 1;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> classes;

    std::uint64_t total_edges() const {
        std::uint64_t total = 0;
        for (const auto& [cls, count] : classes) total += count;
        return total;
    }

    friend bool operator==(const EdgePartition& a, const EdgePartition& b) {
        return a.classes == b.classes;
    }

    std::string to_string() const {
        std::string out;
        for (const auto& [cls, count] : classes) {
            if (!out.empty()) out += ';';
            out += std::to_string(cls.first) + '-' + std::to_string(cls.second) + ':' +
                   std::to_string(count);
        }
        return out;
    }
};

namespace detail {

inline void require_profile(const MolecularGraph& g, const KDegreeProfile& profile) {
    if (profile.degrees.size() != g.vertex_count())
        throw ProfileMismatch("profile has " + std::to_string(profile.degrees.size()) +
                              " entries for a graph with " + std::to_string(g.vertex_count()) +
                              " vertices");
}

inline wide_int int_edge_term(IndexKind kind, wide_int a, wide_int b) {
    switch (kind) {
        case IndexKind::LM1:
        case IndexKind::M1:
            return checked_add(a, b);
        case IndexKind::LM2:
        case IndexKind::M2:
            return checked_mul(a, b);
        case IndexKind::HLM1: {
            const wide_int s = checked_add(a, b);
            return checked_mul(s, s);
        }
        case IndexKind::HLM2:
        case IndexKind::HM2: {
            const wide_int m = checked_mul(a, b);
            return checked_mul(m, m);
        }
        case IndexKind::LF:
        case IndexKind::F:
            return checked_add(checked_mul(a, a), checked_mul(b, b));
        case IndexKind::HLF:
        case IndexKind::HF: {
            const wide_int s = checked_add(checked_mul(a, a), checked_mul(b, b));
            return checked_mul(s, s);
        }
        case IndexKind::LY:
        case IndexKind::Y:
            return checked_add(checked_mul(checked_mul(a, a), a), checked_mul(checked_mul(b, b), b));
        default:
            throw UnknownKind("kind has no integer edge functor: " + std::string(to_token(kind)));
    }
}

inline double real_edge_term(IndexKind kind, double a, double b) {
    if (kind == IndexKind::LSO) return std::sqrt(a + b);
    return std::sqrt(a * a + b * b); // SO
}

} // namespace detail

inline EdgePartition edge_partition(const MolecularGraph& g, const KDegreeProfile& profile) {
    detail::require_profile(g, profile);
    EdgePartition partition;
    partition.k = profile.k;
    for (const auto& [u, v] : g.edges()) {
        std::uint32_t a = profile.degrees[u];
        std::uint32_t b = profile.degrees[v];
        if (a > b) std::swap(a, b);
        ++partition.classes[{a, b}];
    }
    return partition;
}

// Direct edge-sum evaluation in canonical edge order. Real-valued kinds
// accumulate in that fixed order so results are bit-reproducible.
inline IndexValue compute_index(const MolecularGraph& g, const KDegreeProfile& profile,
                                IndexKind kind) {
    detail::require_profile(g, profile);
    const auto& deg = profile.degrees;

    if (real_valued(kind)) {
        double sum = 0.0;
        for (const auto& [u, v] : g.edges())
            sum += detail::real_edge_term(kind, static_cast<double>(deg[u]),
                                          static_cast<double>(deg[v]));
        return IndexValue::approx(sum);
    }

    if (kind == IndexKind::LYCO || kind == IndexKind::YCO) {
        wide_int lf = 0;
        wide_int ly = 0;
        for (const auto& [u, v] : g.edges()) {
            lf = checked_add(lf, detail::int_edge_term(IndexKind::LF, deg[u], deg[v]));
            ly = checked_add(ly, detail::int_edge_term(IndexKind::LY, deg[u], deg[v]));
        }
        const wide_int n_minus_1 = static_cast<wide_int>(g.vertex_count()) - 1;
        return IndexValue::exact(checked_sub(checked_mul(n_minus_1, lf), ly));
    }

    if (kind == IndexKind::HM2CO) {
        // Over unordered non-adjacent distinct pairs:
        //   sum a^2 b^2 = ((sum d^2)^2 - sum d^4) / 2 - sum over edges.
        wide_int sum_sq = 0;
        wide_int sum_fourth = 0;
        for (const std::uint32_t d : deg) {
            const wide_int d2 = checked_mul(d, d);
            sum_sq = checked_add(sum_sq, d2);
            sum_fourth = checked_add(sum_fourth, checked_mul(d2, d2));
        }
        wide_int adjacent = 0;
        for (const auto& [u, v] : g.edges())
            adjacent = checked_add(adjacent, detail::int_edge_term(IndexKind::HM2, deg[u], deg[v]));
        const wide_int all_pairs = checked_sub(checked_mul(sum_sq, sum_sq), sum_fourth) / 2;
        return IndexValue::exact(checked_sub(all_pairs, adjacent));
    }

    wide_int sum = 0;
    for (const auto& [u, v] : g.edges())
        sum = checked_add(sum, detail::int_edge_term(kind, deg[u], deg[v]));
    return IndexValue::exact(sum);
}

// Same edge functors applied to a partition; used to cross-check the direct
// path and to evaluate symbolic partitions. Needs n only for the coindex rule.
inline IndexValue index_from_partition(const EdgePartition& partition, IndexKind kind,
                                       std::size_t vertex_count = 0) {
    if (real_valued(kind)) {
        double sum = 0.0;
        for (const auto& [cls, count] : partition.classes)
            sum += static_cast<double>(count) *
                   detail::real_edge_term(kind, cls.first, cls.second);
        return IndexValue::approx(sum);
    }
    if (kind == IndexKind::LYCO || kind == IndexKind::YCO) {
        const wide_int lf = index_from_partition(partition, IndexKind::LF).as_integer();
        const wide_int ly = index_from_partition(partition, IndexKind::LY).as_integer();
        const wide_int n_minus_1 = static_cast<wide_int>(vertex_count) - 1;
        return IndexValue::exact(checked_sub(checked_mul(n_minus_1, lf), ly));
    }
    if (kind == IndexKind::HM2CO)
        throw UnknownKind("hm2co is not an edge-partition sum");
    wide_int sum = 0;
    for (const auto& [cls, count] : partition.classes)
        sum = checked_add(sum, checked_mul(static_cast<wide_int>(count),
                                           detail::int_edge_term(kind, cls.first, cls.second)));
    return IndexValue::exact(sum);
}

// Sparse polynomial: exponent -> positive coefficient. Evaluating at 1 gives
// m; the exponent-weighted coefficient sum gives the matching index.
struct IndexPolynomial {
    std::map<std::int64_t, std::int64_t> terms;

    wide_int value_at_one() const {
        wide_int sum = 0;
        for (const auto& [e, c] : terms) sum = checked_add(sum, c);
        return sum;
    }

    wide_int derivative_at_one() const {
        wide_int sum = 0;
        for (const auto& [e, c] : terms) sum = checked_add(sum, checked_mul(e, c));
        return sum;
    }

    friend bool operator==(const IndexPolynomial& a, const IndexPolynomial& b) {
        return a.terms == b.terms;
    }

    // Ascending-exponent rendering, e.g. "2x^4 + 4x^5 + 3x^10".
    std::string to_string() const {
        if (terms.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms) {
            if (!out.empty()) out += " + ";
            out += std::to_string(c) + "x^" + std::to_string(e);
        }
        return out;
    }
};

namespace detail {

inline std::int64_t poly_exponent(IndexKind kind, std::int64_t a, std::int64_t b) {
    auto mul = [](std::int64_t x, std::int64_t y) {
        std::int64_t out;
        if (__builtin_mul_overflow(x, y, &out)) throw Overflow("polynomial exponent overflow");
        return out;
    };
    switch (kind) {
        case IndexKind::LM1: return a + b;
        case IndexKind::LM2: return mul(a, b);
        case IndexKind::HLM1: return mul(a + b, a + b);
        case IndexKind::HLM2: return mul(mul(a, b), mul(a, b));
        default:
            throw UnknownKind("no polynomial form for kind: " + std::string(to_token(kind)));
    }
}

} // namespace detail

inline IndexPolynomial compute_polynomial(const MolecularGraph& g, const KDegreeProfile& profile,
                                          IndexKind kind) {
    detail::require_profile(g, profile);
    IndexPolynomial poly;
    for (const auto& [u, v] : g.edges())
        ++poly.terms[detail::poly_exponent(kind, profile.degrees[u], profile.degrees[v])];
    return poly;
}

inline IndexPolynomial polynomial_from_partition(const EdgePartition& partition, IndexKind kind) {
    IndexPolynomial poly;
    for (const auto& [cls, count] : partition.classes) {
        if (count == 0) continue;
        poly.terms[detail::poly_exponent(kind, cls.first, cls.second)] +=
            static_cast<std::int64_t>(count);
    }
    return poly;
}

inline Rational poly_eval(const IndexPolynomial& poly, const Rational& x) {
    // Horner over descending exponents, stepping by the gap between terms.
    Rational acc{0};
    std::int64_t exponent = 0;
    bool first = true;
    for (auto it = poly.terms.rbegin(); it != poly.terms.rend(); ++it) {
        if (!first)
            for (std::int64_t i = it->first; i < exponent; ++i) acc = acc * x;
        exponent = it->first;
        first = false;
        acc = acc + Rational{it->second};
    }
    for (std::int64_t i = 0; i < exponent; ++i) acc = acc * x;
    return acc;
}

} // namespace leapidx
