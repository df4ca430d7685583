#include <cmath>

#include <catch_amalgamated.hpp>

#include "leapidx/benzenoid.hpp"
#include "leapidx/indices.hpp"
#include "leapidx/k_degree.hpp"
#include "support.hpp"

using namespace leapidx;

namespace {

MolecularGraph c6() {
    return new_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
}

EdgePartition part_of(const MolecularGraph& g, unsigned k = 2) {
    return edge_partition(g, k_degree_profile(g, k));
}

wide_int oracle(const MolecularGraph& g, IndexKind kind, unsigned k = 2) {
    return compute_index(g, k_degree_profile(g, k), kind).as_integer();
}

} // namespace

TEST_CASE("edge partition of the named graphs") {
    EdgePartition want;
    want.classes = {{{2, 2}, 6}};
    CHECK(part_of(c6()) == want);

    // Staircase Z_3: only the two chain-end fusion bonds are (4,5).
    want.classes = {{{2, 2}, 2}, {{2, 3}, 4}, {{3, 3}, 4}, {{3, 4}, 4},
                    {{3, 5}, 8}, {{4, 5}, 2}, {{5, 5}, 7}};
    CHECK(part_of(zigzag(3)) == want);

    want.classes = {{{2, 3}, 4}, {{3, 3}, 2}, {{3, 4}, 8}, {{4, 6}, 4}, {{6, 6}, 1}};
    CHECK(part_of(rhombic(2)) == want);

    CHECK(part_of(zigzag(7)).total_edges() == zigzag(7).edge_count());
}

TEST_CASE("index values on C6 at k=2") {
    const MolecularGraph g = c6();
    CHECK(oracle(g, IndexKind::LM1) == 24);
    CHECK(oracle(g, IndexKind::LY) == 96);
    // (n-1)*LF - LY = 5*48 - 96.
    CHECK(oracle(g, IndexKind::LYCO) == 144);
}

TEST_CASE("index values on the benzenoid families at k=2") {
    const MolecularGraph z2 = zigzag(2);
    CHECK(oracle(z2, IndexKind::LM1) == 148);
    CHECK(oracle(z2, IndexKind::LM2) == 273);
    CHECK(oracle(z2, IndexKind::HLM1) == 1118);
    CHECK(oracle(z2, IndexKind::HLM2) == 4489);
    CHECK(oracle(z2, IndexKind::LF) == 572);
    CHECK(oracle(z2, IndexKind::HLF) == 19438);
    CHECK(oracle(z2, IndexKind::LY) == 2380);
    // 17*572 - 2380.
    CHECK(oracle(z2, IndexKind::LYCO) == 7344);

    CHECK(oracle(rhombic(4), IndexKind::LM2) == 1438);
    CHECK(oracle(rhombic(3), IndexKind::HLF) == 77620);
    CHECK(oracle(rhombic(2), IndexKind::LYCO) == 5992);

    const double z5_lso = compute_index(zigzag(5), k_degree_profile(zigzag(5), 2),
                                        IndexKind::LSO).as_double();
    const double expected = 10 + 4 * std::sqrt(5.0) + 4 * std::sqrt(7.0) +
                            8 * std::sqrt(6.0) + 32 * std::sqrt(2.0) + 15 * std::sqrt(10.0);
    CHECK(z5_lso == Catch::Approx(expected).epsilon(1e-12));
}

TEST_CASE("direct edge sums factor through the partition") {
    std::vector<MolecularGraph> graphs{zigzag(4), rhombic(3), c6()};
    for (const std::uint64_t mask : testsupport::sampled_masks(8, 60))
        graphs.push_back(testsupport::graph_from_mask(8, mask));
    for (const auto& g : graphs) {
        for (const unsigned k : {1u, 2u, 3u}) {
            const KDegreeProfile profile = k_degree_profile(g, k);
            const EdgePartition partition = edge_partition(g, profile);
            for (const IndexKind kind : leap_kinds()) {
                const IndexValue direct = compute_index(g, profile, kind);
                const IndexValue via = index_from_partition(partition, kind, g.vertex_count());
                if (real_valued(kind))
                    CHECK(direct.as_double() == Catch::Approx(via.as_double()).epsilon(1e-12));
                else
                    CHECK(direct.as_integer() == via.as_integer());
            }
        }
    }
}

TEST_CASE("LYCO + LY = (n-1) LF identically") {
    std::vector<MolecularGraph> graphs{zigzag(5), rhombic(4)};
    for (const std::uint64_t mask : testsupport::sampled_masks(7, 40))
        graphs.push_back(testsupport::graph_from_mask(7, mask));
    for (const auto& g : graphs) {
        for (const unsigned k : {1u, 2u, 4u}) {
            const KDegreeProfile profile = k_degree_profile(g, k);
            const wide_int lf = compute_index(g, profile, IndexKind::LF).as_integer();
            const wide_int ly = compute_index(g, profile, IndexKind::LY).as_integer();
            const wide_int lyco = compute_index(g, profile, IndexKind::LYCO).as_integer();
            CHECK(lyco + ly == static_cast<wide_int>(g.vertex_count() - 1) * lf);
        }
    }
}

TEST_CASE("k=1 kinds equal the classical degree-based indices") {
    auto check_graph = [](const MolecularGraph& g) {
        const KDegreeProfile p1 = k_degree_profile(g, 1);
        wide_int m1 = 0, m2 = 0, f = 0, hf = 0, y = 0, hm2 = 0;
        double so = 0;
        for (const auto& [u, v] : g.edges()) {
            const wide_int du = g.degree(u), dv = g.degree(v);
            m1 += du + dv;
            m2 += du * dv;
            f += du * du + dv * dv;
            hf += (du * du + dv * dv) * (du * du + dv * dv);
            y += du * du * du + dv * dv * dv;
            hm2 += du * du * dv * dv;
            so += std::sqrt(static_cast<double>(du * du + dv * dv));
        }
        CHECK(compute_index(g, p1, IndexKind::M1).as_integer() == m1);
        CHECK(compute_index(g, p1, IndexKind::M2).as_integer() == m2);
        CHECK(compute_index(g, p1, IndexKind::F).as_integer() == f);
        CHECK(compute_index(g, p1, IndexKind::HF).as_integer() == hf);
        CHECK(compute_index(g, p1, IndexKind::Y).as_integer() == y);
        CHECK(compute_index(g, p1, IndexKind::HM2).as_integer() == hm2);
        CHECK(compute_index(g, p1, IndexKind::YCO).as_integer() ==
              static_cast<wide_int>(g.vertex_count() - 1) * f - y);
        CHECK(compute_index(g, p1, IndexKind::SO).as_double() == Catch::Approx(so).epsilon(1e-12));
        // The leap functors at k=1 are the same sums.
        CHECK(compute_index(g, p1, IndexKind::LM1).as_integer() == m1);
        CHECK(compute_index(g, p1, IndexKind::LF).as_integer() == f);
        CHECK(compute_index(g, p1, IndexKind::LY).as_integer() == y);
    };
    for (unsigned n = 2; n <= 5; ++n) {
        const std::uint64_t total = std::uint64_t{1} << testsupport::pair_count(n);
        for (std::uint64_t mask = 0; mask < total; ++mask)
            check_graph(testsupport::graph_from_mask(n, mask));
    }
    for (const std::uint64_t mask : testsupport::sampled_masks(8, 100))
        check_graph(testsupport::graph_from_mask(8, mask));
}

TEST_CASE("HM2CO equals brute-force enumeration of non-adjacent pairs") {
    for (unsigned n = 2; n <= 6; ++n) {
        const std::uint64_t total = std::uint64_t{1} << testsupport::pair_count(n);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const MolecularGraph g = testsupport::graph_from_mask(n, mask);
            const KDegreeProfile p1 = k_degree_profile(g, 1);
            CHECK(compute_index(g, p1, IndexKind::HM2CO).as_integer() ==
                  testsupport::brute_hm2co(g, p1.degrees));
        }
    }
    // P4 has three non-adjacent pairs.
    const MolecularGraph p4 = new_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    const KDegreeProfile p1 = k_degree_profile(p4, 1);
    CHECK(testsupport::brute_hm2co(p4, p1.degrees) == 1 * 4 + 1 * 4 + 1 * 1);
    CHECK(compute_index(p4, p1, IndexKind::HM2CO).as_integer() == 9);
}

TEST_CASE("polynomials of the named graphs") {
    const auto z2 = compute_polynomial(zigzag(2), k_degree_profile(zigzag(2), 2), IndexKind::LM1);
    CHECK(z2.to_string() == "2x^4 + 4x^5 + 2x^6 + 4x^7 + 4x^8 + 2x^9 + 3x^10");

    const auto c6lm2 = compute_polynomial(c6(), k_degree_profile(c6(), 2), IndexKind::LM2);
    CHECK(c6lm2.to_string() == "6x^4");

    const auto r2 = compute_polynomial(rhombic(2), k_degree_profile(rhombic(2), 2), IndexKind::HLM2);
    CHECK(r2.to_string() == "4x^36 + 2x^81 + 8x^144 + 4x^576 + 1x^1296");
}

TEST_CASE("polynomial identities over the families") {
    for (const bool zig : {true, false}) {
        for (long p = 2; p <= 10; ++p) {
            const MolecularGraph g = zig ? zigzag(p) : rhombic(p);
            const KDegreeProfile profile = k_degree_profile(g, 2);
            for (const IndexKind kind :
                 {IndexKind::LM1, IndexKind::LM2, IndexKind::HLM1, IndexKind::HLM2}) {
                const IndexPolynomial poly = compute_polynomial(g, profile, kind);
                CHECK(poly.value_at_one() == static_cast<wide_int>(g.edge_count()));
                CHECK(poly.derivative_at_one() == compute_index(g, profile, kind).as_integer());
                CHECK(poly_eval(poly, Rational{1}) == Rational{static_cast<wide_int>(g.edge_count())});
            }
        }
    }
}

TEST_CASE("poly_eval is exact") {
    IndexPolynomial poly;
    poly.terms = {{4, 6}};
    CHECK(poly_eval(poly, Rational{2}) == Rational{96});
    CHECK(poly_eval(poly, Rational{1, 2}) == Rational{6, 16});

    IndexPolynomial gaps;
    gaps.terms = {{0, 3}, {5, 2}, {7, 1}};
    CHECK(poly_eval(gaps, Rational{2}) == Rational{3 + 2 * 32 + 128});
    CHECK(poly_eval(gaps, Rational{-1}) == Rational{3 - 2 - 1});
    CHECK(poly_eval(IndexPolynomial{}, Rational{5}) == Rational{0});
}

TEST_CASE("indices above the diameter are zero") {
    const MolecularGraph g = c6();
    const KDegreeProfile profile = k_degree_profile(g, 4);
    for (const IndexKind kind : leap_kinds()) {
        if (real_valued(kind))
            CHECK(compute_index(g, profile, kind).as_double() == 0.0);
        else
            CHECK(compute_index(g, profile, kind).as_integer() == 0);
    }
}

TEST_CASE("oracle leap indices increase strictly with p on the zigzag family") {
    std::vector<wide_int> prev;
    double prev_lso = 0;
    for (long p = 2; p <= 10; ++p) {
        const MolecularGraph g = zigzag(p);
        const KDegreeProfile profile = k_degree_profile(g, 2);
        std::vector<wide_int> row;
        for (const IndexKind kind : {IndexKind::LM1, IndexKind::LM2, IndexKind::HLM1,
                                     IndexKind::HLM2, IndexKind::LF, IndexKind::HLF,
                                     IndexKind::LY, IndexKind::LYCO})
            row.push_back(compute_index(g, profile, kind).as_integer());
        const double lso = compute_index(g, profile, IndexKind::LSO).as_double();
        if (!prev.empty()) {
            for (std::size_t i = 0; i < row.size(); ++i) CHECK(row[i] > prev[i]);
            CHECK(lso > prev_lso);
        }
        prev = row;
        prev_lso = lso;
    }
}

TEST_CASE("engine error paths") {
    const MolecularGraph g = c6();
    KDegreeProfile wrong;
    wrong.k = 2;
    wrong.degrees = {1, 2, 3};
    CHECK_THROWS_AS(edge_partition(g, wrong), ProfileMismatch);
    CHECK_THROWS_AS(compute_index(g, wrong, IndexKind::LM1), ProfileMismatch);

    const KDegreeProfile ok = k_degree_profile(g, 2);
    CHECK_THROWS_AS(compute_polynomial(g, ok, IndexKind::LF), UnknownKind);
    CHECK(kind_from_token("lm1") == IndexKind::LM1);
    CHECK(kind_from_token("hm2co") == IndexKind::HM2CO);
    CHECK_FALSE(kind_from_token("nope").has_value());
}
