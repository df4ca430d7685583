#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "leapidx/errors.hpp"
#include "leapidx/graph.hpp"

namespace leapidx {

// Axial hexagon coordinates. The six neighbors of (q, r) differ by
// (+-1, 0), (0, +-1), (+1, -1), (-1, +1).
struct HexCoord {
    int q = 0;
    int r = 0;
    friend bool operator==(const HexCoord&, const HexCoord&) = default;
    friend auto operator<=>(const HexCoord&, const HexCoord&) = default;
};

struct HexagonalSystem {
    std::vector<HexCoord> hexes; // sorted, unique
    std::size_t internal_vertices = 0;
    std::size_t hexagon_count() const { return hexes.size(); }
};

struct BenzenoidGraph {
    MolecularGraph graph;
    HexagonalSystem system;
};

namespace detail {

// Neighbor offsets in counterclockwise order.
constexpr std::array<HexCoord, 6> kHexNeighbors{{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

// Corner i of hexagon c sits between neighbor directions i and i+1; keying it
// by 3c + N[i] + N[i+1] makes the key the sum of the (up to) three hexagon
// centers that meet there. Adjacent hexagons therefore share exactly two
// corner keys and a vertex interior to three hexagons gets one key from each,
// all in exact integer arithmetic.
constexpr std::array<HexCoord, 6> corner_directions() {
    std::array<HexCoord, 6> dirs{};
    for (int i = 0; i < 6; ++i) {
        const HexCoord a = kHexNeighbors[static_cast<std::size_t>(i)];
        const HexCoord b = kHexNeighbors[static_cast<std::size_t>((i + 1) % 6)];
        dirs[static_cast<std::size_t>(i)] = HexCoord{a.q + b.q, a.r + b.r};
    }
    return dirs;
}

// Packs a corner key into one integer whose ordering matches (q, r)
// lexicographic order.
inline std::int64_t pack_corner(int kq, int kr) {
    constexpr std::int64_t bias = std::int64_t{1} << 31;
    return ((static_cast<std::int64_t>(kq) + bias) << 32) | (static_cast<std::int64_t>(kr) + bias);
}

inline std::int64_t pack_hex(const HexCoord& c) {
    return pack_corner(c.q, c.r);
}

} // namespace detail

// Builds the molecular graph of a benzenoid system: each hexagon contributes
// its six corners and six boundary edges; corners shared between hexagons are
// identified exactly. Vertex ids follow sorted corner-key order.
inline BenzenoidGraph build_system(std::vector<HexCoord> hexes) {
    std::sort(hexes.begin(), hexes.end());
    hexes.erase(std::unique(hexes.begin(), hexes.end()), hexes.end());
    if (hexes.empty()) throw EmptySystem("benzenoid system needs at least one hexagon");

    std::unordered_set<std::int64_t> hex_set;
    hex_set.reserve(hexes.size() * 2);
    for (const auto& c : hexes) hex_set.insert(detail::pack_hex(c));

    // Hex-adjacency connectivity.
    std::vector<HexCoord> stack{hexes.front()};
    std::unordered_set<std::int64_t> seen{detail::pack_hex(hexes.front())};
    while (!stack.empty()) {
        const HexCoord c = stack.back();
        stack.pop_back();
        for (const auto& d : detail::kHexNeighbors) {
            const HexCoord nb{c.q + d.q, c.r + d.r};
            const std::int64_t key = detail::pack_hex(nb);
            if (hex_set.contains(key) && seen.insert(key).second) stack.push_back(nb);
        }
    }
    if (seen.size() != hexes.size())
        throw DisconnectedSystem("hexagons do not form a connected system");

    constexpr auto corner_dirs = detail::corner_directions();
    std::vector<std::int64_t> corners;
    corners.reserve(hexes.size() * 6);
    for (const auto& c : hexes)
        for (const auto& d : corner_dirs) corners.push_back(detail::pack_corner(3 * c.q + d.q, 3 * c.r + d.r));

    std::vector<std::int64_t> ids(corners);
    std::sort(ids.begin(), ids.end());
    // A key appearing three times is an internal vertex (shared by 3 hexagons).
    std::size_t internal = 0;
    {
        std::size_t run = 1;
        for (std::size_t i = 1; i <= ids.size(); ++i) {
            if (i < ids.size() && ids[i] == ids[i - 1]) {
                ++run;
            } else {
                if (run == 3) ++internal;
                run = 1;
            }
        }
    }
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    auto vertex_of = [&ids](std::int64_t key) {
        return static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), key) - ids.begin());
    };

    EdgeList edges;
    edges.reserve(hexes.size() * 6);
    for (std::size_t h = 0; h < hexes.size(); ++h) {
        for (std::size_t i = 0; i < 6; ++i) {
            VertexId u = vertex_of(corners[h * 6 + i]);
            VertexId v = vertex_of(corners[h * 6 + (i + 1) % 6]);
            if (u > v) std::swap(u, v);
            edges.emplace_back(u, v);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    BenzenoidGraph out;
    out.graph = MolecularGraph(ids.size(), std::move(edges));
    out.system.hexes = std::move(hexes);
    out.system.internal_vertices = internal;
    return out;
}

// Zigzag system Z_p: p rows of two hexagons; each row attaches on top of the
// rightmost hexagon of the row below, giving a staircase of 2p hexagons with
// 8p+2 vertices and 10p+1 edges and no internal vertex.
inline std::vector<HexCoord> zigzag_hexes(long p) {
    if (p < 1) throw InvalidParameter("zigzag requires p >= 1");
    std::vector<HexCoord> hexes;
    hexes.reserve(static_cast<std::size_t>(2 * p));
    for (int i = 0; i < p; ++i) {
        hexes.push_back({i, i});
        hexes.push_back({i + 1, i});
    }
    return hexes;
}

// Rhombic system R_p: a p x p parallelogram of hexagons with 2p(p+2)
// vertices, 3p^2+4p-1 edges and 2(p-1)^2 internal vertices.
inline std::vector<HexCoord> rhombic_hexes(long p) {
    if (p < 1) throw InvalidParameter("rhombic requires p >= 1");
    std::vector<HexCoord> hexes;
    hexes.reserve(static_cast<std::size_t>(p * p));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) hexes.push_back({i, j});
    return hexes;
}

inline BenzenoidGraph zigzag_system(long p) {
    return build_system(zigzag_hexes(p));
}

inline BenzenoidGraph rhombic_system(long p) {
    return build_system(rhombic_hexes(p));
}

inline MolecularGraph zigzag(long p) {
    return zigzag_system(p).graph;
}

inline MolecularGraph rhombic(long p) {
    return rhombic_system(p).graph;
}

// Hex coordinate file: one "q r" pair per line; '#' starts a comment.
inline std::vector<HexCoord> read_hex_list(std::istream& in) {
    std::vector<HexCoord> hexes;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        HexCoord c;
        if (!(ls >> c.q >> c.r))
            throw ParseError("hex list: malformed coordinate at line " + std::to_string(line_no));
        hexes.push_back(c);
    }
    return hexes;
}

} // namespace leapidx
