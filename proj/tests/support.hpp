#pragma once

// Test-only reference oracles, kept independent of the library's computation
// paths: distances come from full per-source BFS (no depth truncation), index
// values from direct sums over the distance matrix, coindex sums from literal
// pair enumeration.

#include <cstdint>
#include <queue>
#include <random>
#include <vector>

#include "leapidx/graph.hpp"

namespace testsupport {

using leapidx::MolecularGraph;

inline std::vector<std::vector<int>> distance_matrix(const MolecularGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (std::size_t s = 0; s < n; ++s) {
        auto& row = dist[s];
        row[s] = 0;
        std::queue<std::uint32_t> q;
        q.push(static_cast<std::uint32_t>(s));
        while (!q.empty()) {
            const std::uint32_t u = q.front();
            q.pop();
            for (const std::uint32_t w : g.neighbors(u)) {
                if (row[w] < 0) {
                    row[w] = row[u] + 1;
                    q.push(w);
                }
            }
        }
    }
    return dist;
}

inline std::vector<std::uint32_t> profile_from_matrix(const std::vector<std::vector<int>>& dist,
                                                      unsigned k) {
    std::vector<std::uint32_t> deg(dist.size(), 0);
    for (std::size_t v = 0; v < dist.size(); ++v)
        for (std::size_t u = 0; u < dist.size(); ++u)
            if (u != v && dist[v][u] == static_cast<int>(k)) ++deg[v];
    return deg;
}

// Labeled graph on n vertices from an edge-presence bitmask over the
// C(n,2) pairs in lexicographic order.
inline MolecularGraph graph_from_mask(unsigned n, std::uint64_t mask) {
    leapidx::EdgeList edges;
    std::size_t bit = 0;
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v, ++bit)
            if (mask & (std::uint64_t{1} << bit)) edges.emplace_back(u, v);
    return {n, std::move(edges)};
}

inline std::uint64_t pair_count(unsigned n) {
    return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

// Fixed-seed mask sampler for sizes where exhaustive enumeration is too big.
inline std::vector<std::uint64_t> sampled_masks(unsigned n, std::size_t count,
                                                std::uint64_t seed = 0x5eed1234) {
    std::mt19937_64 rng(seed + n);
    std::uniform_int_distribution<std::uint64_t> dist(0, (std::uint64_t{1} << pair_count(n)) - 1);
    std::vector<std::uint64_t> masks(count);
    for (auto& m : masks) m = dist(rng);
    return masks;
}

inline long long brute_hm2co(const MolecularGraph& g, const std::vector<std::uint32_t>& deg) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
    for (const auto& [u, v] : g.edges()) adjacent[u][v] = adjacent[v][u] = true;
    long long sum = 0;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (!adjacent[u][v])
                sum += static_cast<long long>(deg[u]) * deg[u] * deg[v] * deg[v];
    return sum;
}

} // namespace testsupport
