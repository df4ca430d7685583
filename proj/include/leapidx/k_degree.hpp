#pragma once

#include <cstdint>
#include <limits>
#include <thread>
#include <vector>

#include "leapidx/errors.hpp"
#include "leapidx/graph.hpp"

namespace leapidx {

// deg_k(v): number of vertices at shortest-path distance exactly k from v.
struct KDegreeProfile {
    unsigned k = 1;
    std::vector<std::uint32_t> degrees;
};

namespace detail {

// Truncated BFS from every source in [begin, end). The visited array is
// stamped with the source id instead of being cleared between sources, so a
// sweep over the whole graph touches each vertex's ball once and nothing else.
inline void k_degree_range(const MolecularGraph& g, unsigned k, VertexId begin, VertexId end,
                           std::vector<std::uint32_t>& out) {
    constexpr VertexId kUnvisited = std::numeric_limits<VertexId>::max();
    std::vector<VertexId> stamp(g.vertex_count(), kUnvisited);
    std::vector<VertexId> frontier;
    std::vector<VertexId> next;
    for (VertexId src = begin; src < end; ++src) {
        stamp[src] = src;
        frontier.assign(1, src);
        std::uint32_t at_depth_k = 0;
        for (unsigned depth = 1; depth <= k && !frontier.empty(); ++depth) {
            next.clear();
            for (const VertexId u : frontier) {
                for (const VertexId w : g.neighbors(u)) {
                    if (stamp[w] != src) {
                        stamp[w] = src;
                        next.push_back(w);
                    }
                }
            }
            if (depth == k) at_depth_k = static_cast<std::uint32_t>(next.size());
            frontier.swap(next);
        }
        out[src] = at_depth_k;
    }
}

} // namespace detail

// Cost per source is bounded by the size of its distance-<=k ball; distances
// beyond k are never explored. Parallel sources write disjoint slots of the
// result, so the profile is identical for any thread count.
inline KDegreeProfile k_degree_profile(const MolecularGraph& g, unsigned k,
                                       unsigned thread_count = 0) {
    if (k < 1) throw InvalidParameter("k must be >= 1");
    KDegreeProfile profile;
    profile.k = k;
    profile.degrees.assign(g.vertex_count(), 0);
    const std::size_t n = g.vertex_count();
    if (n == 0) return profile;

    if (thread_count == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        thread_count = hw == 0 ? 1 : hw;
    }
    // Below this size thread startup costs more than the sweep itself.
    if (n < 4096 || thread_count <= 1) {
        detail::k_degree_range(g, k, 0, static_cast<VertexId>(n), profile.degrees);
        return profile;
    }

    std::vector<std::thread> workers;
    workers.reserve(thread_count);
    const std::size_t chunk = (n + thread_count - 1) / thread_count;
    for (unsigned t = 0; t < thread_count; ++t) {
        const std::size_t lo = t * chunk;
        if (lo >= n) break;
        const std::size_t hi = std::min(n, lo + chunk);
        workers.emplace_back([&g, k, lo, hi, &profile] {
            detail::k_degree_range(g, k, static_cast<VertexId>(lo), static_cast<VertexId>(hi),
                                   profile.degrees);
        });
    }
    for (auto& w : workers) w.join();
    return profile;
}

} // namespace leapidx
