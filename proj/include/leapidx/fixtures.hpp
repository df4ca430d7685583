#pragma once

#include <optional>
#include <string_view>

#include "leapidx/closed_form.hpp"
#include "leapidx/indices.hpp"

namespace leapidx {

// Published numeric tables for Z_p and R_p, embedded verbatim so verification
// is hermetic. Integer columns are exact; the LSO column is printed rounded
// (to two decimals, one row to one).
struct Fixture {
    Family family;
    int p;
    IndexKind kind;
    bool exact;
    long long int_value;
    double real_value;
    std::string_view source; // "Table 3".."Table 6"
};

namespace fixtures {

struct ZagrebRow {
    long long lm1, lm2, hlm1, hlm2;
};
struct LeapRow {
    double lso;
    long long lf, hlf, ly, lyco;
};

// Zigzag, p = 2..10.
inline constexpr ZagrebRow kTable3[9] = {
    {148, 273, 1068, 4417},  {231, 446, 1777, 7754},   {314, 619, 2486, 11091},
    {397, 792, 3195, 14428}, {480, 965, 3904, 17765},  {563, 1138, 4613, 21102},
    {646, 1311, 5322, 24439}, {729, 1484, 6031, 27776}, {812, 1657, 6740, 31113}};

inline constexpr LeapRow kTable4[9] = {
    {55.21, 572, 19438, 2380, -1808},     {83.9, 935, 33891, 4035, -6200},
    {112.59, 1298, 48344, 5640, -13176},  {141.28, 1661, 62797, 7345, -22736},
    {169.97, 2024, 77250, 9000, -34880},  {198.66, 2387, 91703, 10655, -49608},
    {227.35, 2750, 106156, 12310, -66920}, {256.04, 3113, 120609, 13965, -86816},
    {284.73, 3476, 135062, 15620, -109296}};

// Rhombic, p = 2..10.
inline constexpr ZagrebRow kTable5[9] = {
    {140, 270, 1108, 5058},    {328, 746, 3028, 18482},   {588, 1438, 5812, 39682},
    {920, 2346, 9460, 68658},  {1324, 3470, 13972, 105410}, {1800, 4810, 19348, 149938},
    {2348, 6366, 25588, 202242}, {2968, 8138, 32692, 262322}, {3660, 10126, 40660, 330178}};

inline constexpr LeapRow kTable6[9] = {
    {51.11, 568, 22324, 2528, 15400},       {110.62, 1536, 77620, 7696, 46160},
    {190.91, 2936, 164020, 15456, 100920},  {291.23, 4768, 281524, 25808, 186160},
    {413.83, 7032, 430132, 38752, 308360},  {556.46, 9728, 609844, 54288, 474000},
    {719.87, 12856, 820660, 72416, 689560}, {904.06, 16416, 1062580, 93136, 961520},
    {1109.04, 20408, 1335604, 116448, 1296360}};

} // namespace fixtures

inline std::optional<Fixture> find_fixture(Family family, int p, IndexKind kind) {
    if (p < 2 || p > 10) return std::nullopt;
    const std::size_t row = static_cast<std::size_t>(p - 2);
    const bool zig = family == Family::Zigzag;
    const auto& zagreb = zig ? fixtures::kTable3[row] : fixtures::kTable5[row];
    const auto& leap = zig ? fixtures::kTable4[row] : fixtures::kTable6[row];
    const std::string_view zagreb_src = zig ? "Table 3" : "Table 5";
    const std::string_view leap_src = zig ? "Table 4" : "Table 6";
    switch (kind) {
        case IndexKind::LM1: return Fixture{family, p, kind, true, zagreb.lm1, 0.0, zagreb_src};
        case IndexKind::LM2: return Fixture{family, p, kind, true, zagreb.lm2, 0.0, zagreb_src};
        case IndexKind::HLM1: return Fixture{family, p, kind, true, zagreb.hlm1, 0.0, zagreb_src};
        case IndexKind::HLM2: return Fixture{family, p, kind, true, zagreb.hlm2, 0.0, zagreb_src};
        case IndexKind::LSO: return Fixture{family, p, kind, false, 0, leap.lso, leap_src};
        case IndexKind::LF: return Fixture{family, p, kind, true, leap.lf, 0.0, leap_src};
        case IndexKind::HLF: return Fixture{family, p, kind, true, leap.hlf, 0.0, leap_src};
        case IndexKind::LY: return Fixture{family, p, kind, true, leap.ly, 0.0, leap_src};
        case IndexKind::LYCO: return Fixture{family, p, kind, true, leap.lyco, 0.0, leap_src};
        default: return std::nullopt;
    }
}

} // namespace leapidx
