#include <sstream>

#include <catch_amalgamated.hpp>

#include <json.hpp>

#include "leapidx/verify.hpp"

using namespace leapidx;

namespace {

const ReportRow& row_of(const VerificationReport& report, Family family, int p,
                        const std::string& quantity) {
    for (const auto& row : report.rows)
        if (row.family == family && row.p == p && row.quantity == quantity) return row;
    FAIL("row not found: " + quantity);
    static ReportRow dummy;
    return dummy;
}

} // namespace

TEST_CASE("report totality and order") {
    const VerificationReport z = verify_range(Family::Zigzag, 2, 10);
    CHECK(z.rows.size() == 90); // 9 quantities x 9 p values + 9 partition rows

    const VerificationReport both = verify_families({Family::Zigzag, Family::Rhombic}, 2, 10);
    CHECK(both.rows.size() == 180);

    // Rows ordered by (family, p, quantity token).
    for (std::size_t i = 1; i < both.rows.size(); ++i) {
        const auto& a = both.rows[i - 1];
        const auto& b = both.rows[i];
        const auto key = [](const ReportRow& r) {
            return std::make_tuple(r.family == Family::Rhombic, r.p, r.quantity);
        };
        CHECK(key(a) < key(b));
    }
}

TEST_CASE("healthy build never reports a raw mismatch on the published range") {
    const VerificationReport both = verify_families({Family::Zigzag, Family::Rhombic}, 2, 10);
    CHECK_FALSE(both.has_mismatch());
    for (const auto& row : both.rows) {
        if (row.status == RowStatus::KnownDiscrepancy) CHECK_FALSE(row.detail.empty());
    }
}

TEST_CASE("zigzag statuses: everything matches at p=2 except the characterized rows") {
    const VerificationReport z = verify_range(Family::Zigzag, 2, 10);
    for (const auto& q : {"lm1", "lm2", "lf", "hlf", "ly", "lso", "partition"})
        CHECK(row_of(z, Family::Zigzag, 2, q).status == RowStatus::Match);
    for (const auto& q : {"hlm1", "hlm2", "lyco"})
        CHECK(row_of(z, Family::Zigzag, 2, q).status == RowStatus::KnownDiscrepancy);
    // The published zigzag partition extrapolates wrongly for p >= 3, which
    // shifts every quantity.
    for (int p = 3; p <= 10; ++p)
        for (const auto& row : z.rows)
            if (row.p == p) CHECK(row.status == RowStatus::KnownDiscrepancy);
}

TEST_CASE("rhombic statuses: clean except LYCO and the drifting LSO cells") {
    const VerificationReport r = verify_range(Family::Rhombic, 2, 10);
    for (int p = 2; p <= 10; ++p) {
        for (const auto& q : {"lm1", "lm2", "hlm1", "hlm2", "lf", "hlf", "ly", "partition"})
            CHECK(row_of(r, Family::Rhombic, p, q).status == RowStatus::Match);
        CHECK(row_of(r, Family::Rhombic, p, "lyco").status == RowStatus::KnownDiscrepancy);
        CHECK(row_of(r, Family::Rhombic, p, "lso").status ==
              (p <= 4 ? RowStatus::Match : RowStatus::KnownDiscrepancy));
    }
}

TEST_CASE("specific report cells") {
    const VerificationReport both = verify_families({Family::Zigzag, Family::Rhombic}, 2, 10);

    const auto& z6 = row_of(both, Family::Zigzag, 6, "lm1");
    CHECK(z6.oracle == "484");
    CHECK(z6.closed == "480");
    CHECK(z6.fixture == "480");

    const auto& zlso = row_of(both, Family::Zigzag, 2, "lso");
    CHECK(zlso.oracle == "55.23");
    CHECK(zlso.fixture == "55.21");
    CHECK(zlso.status == RowStatus::Match);

    const auto& rlyco = row_of(both, Family::Rhombic, 2, "lyco");
    CHECK(rlyco.oracle == "5992");
    CHECK(rlyco.closed == "-1880");
    CHECK(rlyco.fixture == "15400");
    CHECK(rlyco.detail.find("matching neither") != std::string::npos);

    // Zigzag LYCO: definition and table differ for every p; the table follows
    // the printed formula exactly.
    for (int p = 2; p <= 10; ++p) {
        const auto& row = row_of(both, Family::Zigzag, p, "lyco");
        CHECK(row.oracle != row.fixture);
        CHECK(row.closed == row.fixture);
    }

    // The single off-formula integer cell: zigzag LY at p=4.
    const auto& typo = row_of(both, Family::Zigzag, 4, "ly");
    CHECK(typo.oracle == "5812");
    CHECK(typo.closed == "5690");
    CHECK(typo.fixture == "5640");
    CHECK(typo.status == RowStatus::KnownDiscrepancy);
    CHECK(typo.detail.find("off its own formula") != std::string::npos);
}

TEST_CASE("partition rows carry class deltas") {
    const VerificationReport z = verify_range(Family::Zigzag, 3, 3);
    const auto& row = row_of(z, Family::Zigzag, 3, "partition");
    CHECK(row.status == RowStatus::KnownDiscrepancy);
    CHECK(row.detail.find("(4,5): 2 vs 3") != std::string::npos);
    CHECK(row.detail.find("(5,5): 7 vs 6") != std::string::npos);
}

TEST_CASE("known discrepancy registry") {
    CHECK(has_known_discrepancy(Family::Zigzag, "lyco"));
    CHECK(has_known_discrepancy(Family::Rhombic, "lyco", "Table 6"));
    CHECK(has_known_discrepancy(Family::Zigzag, "partition", "Table 1"));
    CHECK(has_known_discrepancy(Family::Rhombic, "lso"));
    CHECK(has_known_discrepancy(Family::Zigzag, "lso")); // rounding-slack entry covers both
    CHECK_FALSE(has_known_discrepancy(Family::Zigzag, "lm1"));
    CHECK_FALSE(has_known_discrepancy(Family::Rhombic, "hlm1"));
    for (const auto& entry : known_discrepancies()) CHECK_FALSE(entry.note.empty());
}

TEST_CASE("unexpected deviations classify as mismatch") {
    // Doctored oracle value: the classifier must not wave it through.
    detail::RowInputs in{Family::Zigzag, 4, IndexKind::LM1, IndexValue::exact(999),
                         closed_index(Family::Zigzag, 4, IndexKind::LM1),
                         find_fixture(Family::Zigzag, 4, IndexKind::LM1)};
    CHECK(detail::classify_index_row(in).status == RowStatus::Mismatch);

    detail::RowInputs lyco{Family::Rhombic, 3, IndexKind::LYCO, IndexValue::exact(12345),
                           closed_index(Family::Rhombic, 3, IndexKind::LYCO),
                           find_fixture(Family::Rhombic, 3, IndexKind::LYCO)};
    CHECK(detail::classify_index_row(lyco).status == RowStatus::Mismatch);

    EdgePartition doctored = closed_partition(Family::Rhombic, 3);
    doctored.classes[{2, 3}] = 5;
    const ReportRow row = detail::classify_partition_row(Family::Rhombic, 3, doctored,
                                                         closed_partition(Family::Rhombic, 3));
    CHECK(row.status == RowStatus::Mismatch);
    CHECK(row.detail.find("(2,3): 5 vs 4") != std::string::npos);
}

TEST_CASE("report rendering is deterministic") {
    const VerificationReport r1 = verify_families({Family::Zigzag, Family::Rhombic}, 2, 6);
    const VerificationReport r2 = verify_families({Family::Zigzag, Family::Rhombic}, 2, 6);

    std::ostringstream csv1, csv2, text, jsonl;
    render_csv(r1, csv1);
    render_csv(r2, csv2);
    CHECK(csv1.str() == csv2.str());
    CHECK(csv1.str().rfind("family,p,quantity,oracle,closed,fixture,status\n", 0) == 0);

    render_text(r1, text);
    CHECK(text.str().find("known-discrepancy") != std::string::npos);

    render_jsonl(r1, jsonl);
    std::istringstream lines(jsonl.str());
    std::string line;
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        const auto record = nlohmann::json::parse(line);
        CHECK(record.contains("family"));
        CHECK(record.contains("status"));
        CHECK(record.contains("detail"));
        ++rows;
    }
    CHECK(rows == r1.rows.size());
}

TEST_CASE("verify beyond the table range and parameter checks") {
    const VerificationReport wide = verify_range(Family::Rhombic, 11, 12);
    for (const auto& row : wide.rows) {
        CHECK(row.fixture == (row.quantity == "partition" ? row.closed : "-"));
        CHECK(row.status != RowStatus::Mismatch);
    }
    CHECK_THROWS_AS(verify_range(Family::Zigzag, 1, 5), InvalidParameter);
    CHECK_THROWS_AS(verify_range(Family::Zigzag, 5, 4), InvalidParameter);
}
