#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "leapidx/errors.hpp"

namespace leapidx {

using VertexId = std::uint32_t;
using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

// Immutable undirected simple graph over contiguous vertex ids 0..n-1.
//
// Construction canonicalizes: every edge is stored as (min, max), the edge
// list is sorted lexicographically, and adjacency rows are sorted ascending.
// Self-loops and duplicate edges (in either orientation) are rejected.
// Once built the graph never changes, so it is freely shareable across threads.
class MolecularGraph {
public:
    MolecularGraph() = default;

    MolecularGraph(std::size_t vertex_count, EdgeList edge_list) : n_(vertex_count) {
        for (auto& [u, v] : edge_list) {
            if (u >= n_ || v >= n_)
                throw IdOutOfRange("edge endpoint " + std::to_string(std::max(u, v)) +
                                   " out of range for " + std::to_string(n_) + " vertices");
            if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
        }
        std::sort(edge_list.begin(), edge_list.end());
        const auto dup = std::adjacent_find(edge_list.begin(), edge_list.end());
        if (dup != edge_list.end())
            throw DuplicateEdge("duplicate edge " + std::to_string(dup->first) + "-" +
                                std::to_string(dup->second));
        edges_ = std::move(edge_list);

        offsets_.assign(n_ + 1, 0);
        for (const auto& [u, v] : edges_) {
            ++offsets_[u + 1];
            ++offsets_[v + 1];
        }
        for (std::size_t i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
        adjacent_.resize(2 * edges_.size());
        std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
        for (const auto& [u, v] : edges_) {
            adjacent_[cursor[u]++] = v;
            adjacent_[cursor[v]++] = u;
        }
        for (std::size_t v = 0; v < n_; ++v)
            std::sort(adjacent_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                      adjacent_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
    }

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {adjacent_.data() + offsets_[v], adjacent_.data() + offsets_[v + 1]};
    }

    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

    // Canonical form: (u, v) with u < v, ascending lexicographic.
    const EdgeList& edges() const noexcept { return edges_; }

    friend bool operator==(const MolecularGraph& a, const MolecularGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<VertexId> adjacent_;
    EdgeList edges_;
};

inline MolecularGraph new_graph(std::size_t vertex_count, EdgeList edges) {
    return {vertex_count, std::move(edges)};
}

// Edge-list text format: first non-comment line "n m", then m lines "u v"
// in ascending lexicographic order, 0-based ids, LF endings. Lines starting
// with '#' are comments.
inline void write_edge_list(const MolecularGraph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline MolecularGraph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto next_data_line = [&](std::string& target) -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            target = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_data_line(header)) throw ParseError("edge list: missing 'n m' header");
    std::istringstream hs(header);
    std::size_t n = 0, m = 0;
    if (!(hs >> n >> m)) throw ParseError("edge list: malformed header at line " + std::to_string(line_no));

    EdgeList edges;
    edges.reserve(m);
    std::string row;
    for (std::size_t i = 0; i < m; ++i) {
        if (!next_data_line(row))
            throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " +
                             std::to_string(i));
        std::istringstream es(row);
        long long u = -1, v = -1;
        if (!(es >> u >> v) || u < 0 || v < 0)
            throw ParseError("edge list: malformed edge at line " + std::to_string(line_no));
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    return {n, std::move(edges)};
}

} // namespace leapidx
