#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "leapidx/benzenoid.hpp"
#include "leapidx/closed_form.hpp"
#include "leapidx/errors.hpp"
#include "leapidx/fixtures.hpp"
#include "leapidx/indices.hpp"
#include "leapidx/k_degree.hpp"

namespace leapidx {

// Three-way comparison per (family, p, quantity): BFS oracle vs published
// closed form vs embedded table value. Deviations that have been verified and
// characterized up front are pre-registered below and reported as
// known-discrepancy, never silently passed; anything unexpected is a mismatch.

enum class RowStatus { Match, Mismatch, KnownDiscrepancy };

inline constexpr std::string_view status_token(RowStatus s) {
    switch (s) {
        case RowStatus::Match: return "match";
        case RowStatus::Mismatch: return "mismatch";
        case RowStatus::KnownDiscrepancy: return "known-discrepancy";
    }
    return "?";
}

struct KnownDiscrepancy {
    std::optional<Family> family; // nullopt: applies to both families
    std::string_view quantity;
    std::string_view source;
    std::string_view note;
};

inline const std::vector<KnownDiscrepancy>& known_discrepancies() {
    static const std::vector<KnownDiscrepancy> entries = {
        {Family::Zigzag, "lyco", "Table 4",
         "the (n-1)*LF-LY definition disagrees with the printed formula -1292p^2+2068p-776, "
         "which expands (p-1)*(LF-LY); the table follows the printed formula"},
        {Family::Rhombic, "lyco", "Table 6",
         "definition, printed formula -1080p^3+2280p^2-1160p-40 and table column are pairwise "
         "unequal; the table matches neither formula"},
        {std::nullopt, "lso", "Tables 4 and 6",
         "table values are printed rounded (mostly two decimals); comparisons use a 0.05 "
         "tolerance"},
        {Family::Zigzag, "partition", "Table 1",
         "published classes (4,5)=p and (5,5)=3(p-1) hold only at p=2; the constructed "
         "staircase has (4,5)=2 and (5,5)=4p-5, which shifts every zigzag quantity for p>=3"},
        {Family::Zigzag, "hlm1", "Table 3",
         "printed 709p-350 is 50 short of the value of its own edge partition (709p-300); "
         "the table follows the printed formula"},
        {Family::Zigzag, "hlm2", "Table 3",
         "printed 3337p-2257 is 72 short of the value of its own edge partition (3337p-2185); "
         "the table follows the printed formula"},
        {Family::Zigzag, "ly", "Table 4",
         "the cell at p=4 prints 5640 where the printed formula 1655p-930 gives 5690 (single-cell "
         "typo; every other integer cell follows its formula)"},
        {Family::Rhombic, "lso", "Table 6",
         "table values drift from the printed closed form by up to 0.83 for p>=5, beyond "
         "rounding; the closed form itself matches the constructed graph exactly"},
    };
    return entries;
}

inline bool has_known_discrepancy(Family family, std::string_view quantity,
                                  std::string_view source = {}) {
    for (const auto& e : known_discrepancies()) {
        if (e.family && *e.family != family) continue;
        if (e.quantity != quantity) continue;
        if (!source.empty() && e.source != source) continue;
        return true;
    }
    return false;
}

namespace reference {

// Closed forms satisfied by the graphs this library actually constructs,
// derived from their verified k=2 edge partitions. For the rhombic family
// these coincide with the published forms; for the zigzag staircase they
// differ for p >= 3 (and for HLM1/HLM2 at every p). Used to tell expected
// published-table deviations apart from regressions in the builders.
inline wide_int zigzag_index(long p, IndexKind kind) {
    switch (kind) {
        case IndexKind::LM1: return detail::poly_in_p(p, {84, -20});
        case IndexKind::LM2: return detail::poly_in_p(p, {178, -83});
        case IndexKind::HLM1: return detail::poly_in_p(p, {728, -338});
        case IndexKind::HLM2: return detail::poly_in_p(p, {3562, -2635});
        case IndexKind::LF: return detail::poly_in_p(p, {372, -172});
        case IndexKind::HLF: return detail::poly_in_p(p, {15272, -11106});
        case IndexKind::LY: return detail::poly_in_p(p, {1716, -1052});
        case IndexKind::LYCO: return detail::poly_in_p(p, {2976, -2720, 880});
        default: throw UnknownKind("no zigzag reference form for this kind");
    }
}

inline Radical zigzag_lso(long p) {
    Radical r;
    r.add(1, 10);
    r.add(2, 8 * (p - 1));
    r.add(5, 4);
    r.add(6, 2 * (p - 1));
    r.add(7, 4);
    r.add(10, 4 * p - 5);
    return r;
}

inline EdgePartition zigzag_partition(long p) {
    EdgePartition partition;
    partition.k = 2;
    partition.classes[{2, 2}] = 2;
    partition.classes[{2, 3}] = 4;
    if (p > 1) partition.classes[{3, 3}] = static_cast<std::uint64_t>(2 * (p - 1));
    partition.classes[{3, 4}] = 4;
    if (p > 1) partition.classes[{3, 5}] = static_cast<std::uint64_t>(4 * (p - 1));
    partition.classes[{4, 5}] = 2;
    partition.classes[{5, 5}] = static_cast<std::uint64_t>(4 * p - 5);
    return partition;
}

// (n-1)*LF - LY with n = 2p(p+2) for the rhombic family.
inline wide_int rhombic_lyco_definition(long p) {
    return detail::poly_in_p(p, {432, 640, -2104, 1136, 104});
}

} // namespace reference

struct ReportRow {
    Family family;
    int p = 0;
    std::string quantity;
    std::string oracle;
    std::string closed;
    std::string fixture;
    RowStatus status = RowStatus::Match;
    std::string detail;
};

struct VerificationReport {
    std::vector<ReportRow> rows;

    std::size_t count(RowStatus status) const {
        std::size_t n = 0;
        for (const auto& r : rows)
            if (r.status == status) ++n;
        return n;
    }
    bool has_mismatch() const { return count(RowStatus::Mismatch) > 0; }
};

namespace detail {

inline std::string two_decimals(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

inline std::string class_deltas(const EdgePartition& oracle, const EdgePartition& closed) {
    std::string out;
    auto append = [&out](std::uint32_t a, std::uint32_t b, std::uint64_t got, std::uint64_t want) {
        if (got == want) return;
        if (!out.empty()) out += ", ";
        out += "(" + std::to_string(a) + "," + std::to_string(b) + "): " + std::to_string(got) +
               " vs " + std::to_string(want);
    };
    for (const auto& [cls, count] : oracle.classes) {
        const auto it = closed.classes.find(cls);
        append(cls.first, cls.second, count, it == closed.classes.end() ? 0 : it->second);
    }
    for (const auto& [cls, count] : closed.classes)
        if (!oracle.classes.contains(cls)) append(cls.first, cls.second, 0, count);
    return out;
}

// The one integer table cell that deviates from its own printed formula:
// the zigzag LY entry at p=4 prints 5640 instead of 5690.
inline bool known_table_cell_typo(Family family, int p, IndexKind kind, long long fixture_value) {
    return family == Family::Zigzag && p == 4 && kind == IndexKind::LY && fixture_value == 5640;
}

// LSO tolerance for table comparisons; tables are printed rounded.
inline constexpr double kLsoTableTolerance = 0.05;

inline bool close(double a, double b, double tol) {
    return std::fabs(a - b) <= tol;
}

inline bool oracle_matches_closed_real(double oracle, double closed) {
    return close(oracle, closed, 1e-9 * std::max(1.0, std::fabs(closed)));
}

struct RowInputs {
    Family family;
    int p;
    IndexKind kind;
    IndexValue oracle;
    ClosedValue closed;
    std::optional<Fixture> fixture;
};

inline ReportRow classify_index_row(const RowInputs& in) {
    ReportRow row;
    row.family = in.family;
    row.p = in.p;
    row.quantity = std::string(to_token(in.kind));

    if (in.kind == IndexKind::LSO) {
        const double o = in.oracle.as_double();
        const double c = in.closed.as_double();
        row.oracle = two_decimals(o);
        row.closed = two_decimals(c);
        row.fixture = in.fixture ? two_decimals(in.fixture->real_value) : "-";
        const bool oc = oracle_matches_closed_real(o, c);
        const bool of = !in.fixture || close(o, in.fixture->real_value, kLsoTableTolerance);
        if (oc && of) {
            row.status = RowStatus::Match;
        } else if (in.family == Family::Zigzag && in.p >= 3 &&
                   oracle_matches_closed_real(o, reference::zigzag_lso(in.p).value())) {
            row.status = RowStatus::KnownDiscrepancy;
            row.detail = "staircase partition differs from Table 1 for p>=3, shifting LSO; "
                         "graph value " + two_decimals(o) + ", printed form " + two_decimals(c);
        } else if (oc && in.fixture) {
            row.status = RowStatus::KnownDiscrepancy;
            row.detail = "table value drifts from the printed closed form beyond rounding "
                         "(|oracle-fixture| = " + two_decimals(std::fabs(o - in.fixture->real_value)) + ")";
        } else {
            row.status = RowStatus::Mismatch;
            row.detail = "unexpected deviation: oracle " + two_decimals(o) + ", closed " +
                         two_decimals(c) + (in.fixture ? ", fixture " + row.fixture : "");
        }
        return row;
    }

    const wide_int o = in.oracle.as_integer();
    const wide_int c = in.closed.as_integer();
    row.oracle = to_decimal(o);
    row.closed = to_decimal(c);
    row.fixture = in.fixture ? std::to_string(in.fixture->int_value) : "-";
    const bool cell_typo =
        in.fixture && known_table_cell_typo(in.family, in.p, in.kind, in.fixture->int_value);
    const bool fixture_equals_closed = !in.fixture || in.fixture->int_value == c || cell_typo;

    if (o == c && (!in.fixture || in.fixture->int_value == c)) {
        row.status = RowStatus::Match;
        return row;
    }

    if (in.kind == IndexKind::LYCO) {
        const wide_int expected = in.family == Family::Zigzag
                                      ? reference::zigzag_index(in.p, IndexKind::LYCO)
                                      : reference::rhombic_lyco_definition(in.p);
        // Zigzag tables follow the printed formula; the rhombic table column
        // is expected to match neither the definition nor the printed form.
        const bool fixture_ok =
            !in.fixture ||
            (in.family == Family::Zigzag
                 ? fixture_equals_closed
                 : in.fixture->int_value != o && in.fixture->int_value != c);
        if (o == expected && fixture_ok) {
            row.status = RowStatus::KnownDiscrepancy;
            row.detail = "definition (n-1)*LF-LY gives " + row.oracle +
                         "; printed (p-1)-variant formula gives " + row.closed;
            if (in.fixture) {
                row.detail += in.family == Family::Zigzag
                                  ? "; table follows the printed formula"
                                  : "; table prints " + row.fixture + ", matching neither";
            }
            return row;
        }
        row.status = RowStatus::Mismatch;
        row.detail = "unexpected coindex deviation: oracle " + row.oracle + ", closed " +
                     row.closed + (in.fixture ? ", fixture " + row.fixture : "");
        return row;
    }

    if (in.family == Family::Zigzag && o == reference::zigzag_index(in.p, in.kind) &&
        fixture_equals_closed) {
        row.status = RowStatus::KnownDiscrepancy;
        const bool slipped =
            in.kind == IndexKind::HLM1 || in.kind == IndexKind::HLM2;
        if (slipped) {
            row.detail = "printed formula is " + std::string(in.kind == IndexKind::HLM1 ? "50" : "72") +
                         " short of its own edge partition";
            if (in.p >= 3) row.detail += "; partition classes (4,5)/(5,5) also hold only at p=2";
        } else {
            row.detail = "published partition classes (4,5)=p, (5,5)=3(p-1) hold only at p=2; "
                         "graph value " + row.oracle + ", published " + row.closed;
        }
        if (cell_typo)
            row.detail += "; table cell prints " + row.fixture + ", off its own formula value " +
                          row.closed;
        return row;
    }

    row.status = RowStatus::Mismatch;
    row.detail = "unexpected deviation: oracle " + row.oracle + ", closed " + row.closed +
                 (in.fixture ? ", fixture " + row.fixture : "");
    return row;
}

inline ReportRow classify_partition_row(Family family, int p, const EdgePartition& oracle,
                                        const EdgePartition& closed) {
    ReportRow row;
    row.family = family;
    row.p = p;
    row.quantity = "partition";
    row.oracle = oracle.to_string();
    row.closed = closed.to_string();
    row.fixture = row.closed; // Tables 1 and 2 are the symbolic partitions.
    if (oracle == closed) {
        row.status = RowStatus::Match;
        return row;
    }
    const std::string deltas = class_deltas(oracle, closed);
    if (family == Family::Zigzag && oracle == reference::zigzag_partition(p)) {
        row.status = RowStatus::KnownDiscrepancy;
        row.detail = "published classes hold only at p=2; " + deltas;
    } else {
        row.status = RowStatus::Mismatch;
        row.detail = "class deltas (oracle vs published): " + deltas;
    }
    return row;
}

} // namespace detail

// Quantity tokens in report order (ascending lexicographic).
inline const std::vector<IndexKind>& verified_kinds() {
    static const std::vector<IndexKind> kinds = {
        IndexKind::HLF, IndexKind::HLM1, IndexKind::HLM2, IndexKind::LF, IndexKind::LM1,
        IndexKind::LM2, IndexKind::LSO,  IndexKind::LY,   IndexKind::LYCO};
    return kinds;
}

inline VerificationReport verify_range(Family family, int p_min, int p_max, unsigned k = 2) {
    if (p_min < 2 || p_min > p_max) throw InvalidParameter("verify requires 2 <= p_min <= p_max");
    VerificationReport report;
    for (int p = p_min; p <= p_max; ++p) {
        const MolecularGraph g = family == Family::Zigzag ? zigzag(p) : rhombic(p);
        const KDegreeProfile profile = k_degree_profile(g, k);
        const EdgePartition oracle_partition = edge_partition(g, profile);

        for (const IndexKind kind : verified_kinds()) {
            if (k != 2) {
                // No published forms away from k=2; report the oracle alone.
                ReportRow row;
                row.family = family;
                row.p = p;
                row.quantity = std::string(to_token(kind));
                row.oracle = compute_index(g, profile, kind).to_string();
                row.closed = "-";
                row.fixture = "-";
                report.rows.push_back(std::move(row));
                continue;
            }
            detail::RowInputs in{family, p, kind, compute_index(g, profile, kind),
                                 closed_index(family, p, kind), find_fixture(family, p, kind)};
            report.rows.push_back(detail::classify_index_row(in));
        }

        if (k == 2) {
            report.rows.push_back(
                detail::classify_partition_row(family, p, oracle_partition,
                                               closed_partition(family, p)));
        } else {
            ReportRow row;
            row.family = family;
            row.p = p;
            row.quantity = "partition";
            row.oracle = oracle_partition.to_string();
            row.closed = "-";
            row.fixture = "-";
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

inline VerificationReport verify_families(const std::vector<Family>& families, int p_min,
                                          int p_max, unsigned k = 2) {
    VerificationReport combined;
    for (const Family family : families) {
        VerificationReport part = verify_range(family, p_min, p_max, k);
        combined.rows.insert(combined.rows.end(), std::make_move_iterator(part.rows.begin()),
                             std::make_move_iterator(part.rows.end()));
    }
    return combined;
}

inline void render_csv(const VerificationReport& report, std::ostream& out) {
    out << "family,p,quantity,oracle,closed,fixture,status\n";
    for (const auto& row : report.rows)
        out << family_token(row.family) << ',' << row.p << ',' << row.quantity << ','
            << row.oracle << ',' << row.closed << ',' << row.fixture << ','
            << status_token(row.status) << '\n';
}

// Line-delimited JSON, one record per row.
inline void render_jsonl(const VerificationReport& report, std::ostream& out) {
    for (const auto& row : report.rows) {
        nlohmann::json record{{"family", family_token(row.family)},
                              {"p", row.p},
                              {"quantity", row.quantity},
                              {"oracle", row.oracle},
                              {"closed", row.closed},
                              {"fixture", row.fixture},
                              {"status", status_token(row.status)},
                              {"detail", row.detail}};
        out << record.dump() << '\n';
    }
}

inline void render_text(const VerificationReport& report, std::ostream& out) {
    out << "family   p   quantity   status             oracle / closed / fixture\n";
    for (const auto& row : report.rows) {
        char line[160];
        std::snprintf(line, sizeof(line), "%-8s %-3d %-10s %-18s ",
                      std::string(family_token(row.family)).c_str(), row.p, row.quantity.c_str(),
                      std::string(status_token(row.status)).c_str());
        out << line << row.oracle << " / " << row.closed << " / " << row.fixture << '\n';
        if (!row.detail.empty()) out << "    note: " << row.detail << '\n';
    }
    out << "rows: " << report.rows.size() << "  match: " << report.count(RowStatus::Match)
        << "  known-discrepancy: " << report.count(RowStatus::KnownDiscrepancy)
        << "  mismatch: " << report.count(RowStatus::Mismatch) << '\n';
}

} // namespace leapidx
