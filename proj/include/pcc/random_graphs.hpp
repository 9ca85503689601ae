#pragma once

// Seeded random instance generation for the verification suites. Draws come
// straight from a caller-owned mt19937_64 in a fixed order, so corpora are
// reproducible from the seed alone (no library-defined distributions, whose
// output may differ across standard libraries).

#include <random>
#include <vector>

#include "pcc/colored_graph.hpp"

namespace pcc {

namespace rnd {

inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    return rng() % n;  // desk-scale sampling; modulo bias is irrelevant here
}

inline double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace rnd

/// Each vertex pair gets an edge with probability `density`, colored
/// uniformly in 1..c.
inline ColoredGraph random_colored_graph(int n, int c, double density, std::mt19937_64& rng) {
    std::vector<ColoredEdge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rnd::unit(rng) < density)
                edges.push_back({u, v, 1 + static_cast<int>(rnd::bounded(rng, static_cast<std::uint64_t>(c)))});
    return ColoredGraph(n, c, std::move(edges));
}

/// Each ordered pair gets an arc with probability `density`.
inline ColoredDigraph random_colored_digraph(int n, int c, double density, std::mt19937_64& rng) {
    std::vector<ColoredArc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && rnd::unit(rng) < density)
                arcs.push_back({u, v, 1 + static_cast<int>(rnd::bounded(rng, static_cast<std::uint64_t>(c)))});
    return ColoredDigraph(n, c, std::move(arcs));
}

}  // namespace pcc
