#pragma once

// Core data model: simple undirected graphs and digraphs whose edges carry
// a color in 1..c, plus monochromatic degree computations and properly
// colored (PC) cycle validity checks.
//
// All types are immutable after construction and safe to share across
// threads. Colors are 1-based throughout.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pcc {

struct ColoredEdge {
    int u = 0;  // endpoints, u < v
    int v = 0;
    int color = 0;
    auto operator<=>(const ColoredEdge&) const = default;
};

struct ColoredArc {
    int tail = 0;
    int head = 0;
    int color = 0;
    auto operator<=>(const ColoredArc&) const = default;
};

namespace detail {
inline void check_color_count(int c) {
    if (c < 2) throw std::invalid_argument("color count must be >= 2, got " + std::to_string(c));
}
inline void check_order(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be >= 0, got " + std::to_string(n));
}
}  // namespace detail

/// Simple undirected graph on vertices 0..n-1 with a color in 1..c per edge.
class ColoredGraph {
public:
    ColoredGraph(int n, int c, std::vector<ColoredEdge> edges)
        : n_(n), c_(c), edges_(std::move(edges)) {
        detail::check_order(n);
        detail::check_color_count(c);
        for (auto& e : edges_) {
            if (e.u > e.v) std::swap(e.u, e.v);
        }
        std::sort(edges_.begin(), edges_.end());
        adj_.resize(static_cast<std::size_t>(n_));
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const auto& e = edges_[i];
            if (e.u < 0 || e.v >= n_)
                throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) +
                                            " " + std::to_string(e.v));
            if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
            if (e.color < 1 || e.color > c_)
                throw std::invalid_argument("edge color out of range: " + std::to_string(e.color));
            if (i > 0 && edges_[i - 1].u == e.u && edges_[i - 1].v == e.v)
                throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + " " +
                                            std::to_string(e.v));
            adj_[static_cast<std::size_t>(e.u)].push_back({e.v, e.color});
            adj_[static_cast<std::size_t>(e.v)].push_back({e.u, e.color});
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    int order() const { return n_; }
    int colors() const { return c_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<ColoredEdge>& edges() const { return edges_; }

    /// Sorted (neighbor, color) pairs of v.
    const std::vector<std::pair<int, int>>& neighbors(int v) const {
        return adj_[static_cast<std::size_t>(check_vertex(v))];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// Color of edge {u,v}, or 0 if absent.
    int edge_color(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& nb = adj_[static_cast<std::size_t>(u)];
        auto it = std::lower_bound(nb.begin(), nb.end(), std::pair<int, int>{v, 0});
        if (it != nb.end() && it->first == v) return it->second;
        return 0;
    }

    bool operator==(const ColoredGraph& o) const {
        return n_ == o.n_ && c_ == o.c_ && edges_ == o.edges_;
    }

    int check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range: " + std::to_string(v));
        return v;
    }

private:
    int n_;
    int c_;
    std::vector<ColoredEdge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

/// Simple digraph on vertices 0..n-1; at most one arc per ordered pair,
/// antiparallel arcs allowed. Each arc carries a color in 1..c.
class ColoredDigraph {
public:
    ColoredDigraph(int n, int c, std::vector<ColoredArc> arcs)
        : n_(n), c_(c), arcs_(std::move(arcs)) {
        detail::check_order(n);
        detail::check_color_count(c);
        std::sort(arcs_.begin(), arcs_.end());
        out_.resize(static_cast<std::size_t>(n_));
        for (std::size_t i = 0; i < arcs_.size(); ++i) {
            const auto& a = arcs_[i];
            if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_)
                throw std::invalid_argument("arc endpoint out of range: " + std::to_string(a.tail) +
                                            " " + std::to_string(a.head));
            if (a.tail == a.head) throw std::invalid_argument("loop at vertex " + std::to_string(a.tail));
            if (a.color < 1 || a.color > c_)
                throw std::invalid_argument("arc color out of range: " + std::to_string(a.color));
            if (i > 0 && arcs_[i - 1].tail == a.tail && arcs_[i - 1].head == a.head)
                throw std::invalid_argument("duplicate arc " + std::to_string(a.tail) + " " +
                                            std::to_string(a.head));
            out_[static_cast<std::size_t>(a.tail)].push_back({a.head, a.color});
        }
        for (auto& nb : out_) std::sort(nb.begin(), nb.end());
    }

    int order() const { return n_; }
    int colors() const { return c_; }
    std::size_t arc_count() const { return arcs_.size(); }
    const std::vector<ColoredArc>& arcs() const { return arcs_; }

    const std::vector<std::pair<int, int>>& out_neighbors(int v) const {
        return out_[static_cast<std::size_t>(check_vertex(v))];
    }

    int out_degree(int v) const { return static_cast<int>(out_neighbors(v).size()); }

    /// Color of arc (tail, head), or 0 if absent.
    int arc_color(int tail, int head) const {
        check_vertex(tail);
        check_vertex(head);
        const auto& nb = out_[static_cast<std::size_t>(tail)];
        auto it = std::lower_bound(nb.begin(), nb.end(), std::pair<int, int>{head, 0});
        if (it != nb.end() && it->first == head) return it->second;
        return 0;
    }

    bool operator==(const ColoredDigraph& o) const {
        return n_ == o.n_ && c_ == o.c_ && arcs_ == o.arcs_;
    }

    int check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range: " + std::to_string(v));
        return v;
    }

private:
    int n_;
    int c_;
    std::vector<ColoredArc> arcs_;
    std::vector<std::vector<std::pair<int, int>>> out_;
};

/// Per-vertex, per-color incidence counts: d_i(x) for graphs, d+_i(x)
/// (out-degrees) for digraphs.
struct DegreeTable {
    int n = 0;
    int c = 0;
    std::vector<int> counts;  // n*c entries, row per vertex

    int at(int v, int color) const {
        if (v < 0 || v >= n) throw std::out_of_range("vertex out of range: " + std::to_string(v));
        if (color < 1 || color > c) throw std::out_of_range("color out of range: " + std::to_string(color));
        return counts[static_cast<std::size_t>(v) * static_cast<std::size_t>(c) +
                      static_cast<std::size_t>(color - 1)];
    }
};

inline DegreeTable degree_table(const ColoredGraph& g) {
    DegreeTable t{g.order(), g.colors(), {}};
    t.counts.assign(static_cast<std::size_t>(t.n) * static_cast<std::size_t>(t.c), 0);
    for (const auto& e : g.edges()) {
        ++t.counts[static_cast<std::size_t>(e.u) * t.c + (e.color - 1)];
        ++t.counts[static_cast<std::size_t>(e.v) * t.c + (e.color - 1)];
    }
    return t;
}

inline DegreeTable degree_table(const ColoredDigraph& d) {
    DegreeTable t{d.order(), d.colors(), {}};
    t.counts.assign(static_cast<std::size_t>(t.n) * static_cast<std::size_t>(t.c), 0);
    for (const auto& a : d.arcs()) ++t.counts[static_cast<std::size_t>(a.tail) * t.c + (a.color - 1)];
    return t;
}

/// d_i(v): number of color-i edges incident with v.
inline int color_degree(const ColoredGraph& g, int v, int color) {
    g.check_vertex(v);
    if (color < 1 || color > g.colors())
        throw std::out_of_range("color out of range: " + std::to_string(color));
    int cnt = 0;
    for (auto [w, k] : g.neighbors(v))
        if (k == color) ++cnt;
    return cnt;
}

/// d+_i(v): number of color-i arcs with tail v.
inline int color_degree(const ColoredDigraph& d, int v, int color) {
    d.check_vertex(v);
    if (color < 1 || color > d.colors())
        throw std::out_of_range("color out of range: " + std::to_string(color));
    int cnt = 0;
    for (auto [w, k] : d.out_neighbors(v))
        if (k == color) ++cnt;
    return cnt;
}

/// Minimum of d_i(v) over all vertices and all colors 1..c.
inline int delta_mon(const ColoredGraph& g) {
    if (g.order() == 0) throw std::invalid_argument("delta_mon of an empty graph");
    DegreeTable t = degree_table(g);
    return *std::min_element(t.counts.begin(), t.counts.end());
}

/// Minimum of d+_i(v) over all vertices and all colors 1..c.
inline int delta_out_mon(const ColoredDigraph& d) {
    if (d.order() == 0) throw std::invalid_argument("delta_out_mon of an empty digraph");
    DegreeTable t = degree_table(d);
    return *std::min_element(t.counts.begin(), t.counts.end());
}

/// A cycle witnessing a properly colored cycle: vertices v0..v(k-1) with
/// colors[i] = color of the edge/arc from v[i] to v[(i+1) mod k].
struct PcCycleCertificate {
    std::vector<int> vertices;
    std::vector<int> colors;

    int length() const { return static_cast<int>(vertices.size()); }
};

namespace detail {

inline bool all_distinct_in_range(std::span<const int> vs, int n) {
    std::vector<int> sorted(vs.begin(), vs.end());
    std::sort(sorted.begin(), sorted.end());
    if (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= n)) return false;
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

// Checks the color sequence of a closed walk: consecutive colors differ at
// every vertex, including the wrap-around.
inline bool colors_properly_alternate(std::span<const int> cols) {
    const std::size_t k = cols.size();
    for (std::size_t i = 0; i < k; ++i)
        if (cols[i] == cols[(i + 1) % k]) return false;
    return true;
}

}  // namespace detail

/// True iff the vertex sequence (not repeating the start) is a properly
/// colored cycle of g. Malformed sequences return false.
inline bool is_pc_cycle(const ColoredGraph& g, std::span<const int> vertices) {
    const std::size_t k = vertices.size();
    if (k < 3) return false;
    if (!detail::all_distinct_in_range(vertices, g.order())) return false;
    std::vector<int> cols(k);
    for (std::size_t i = 0; i < k; ++i) {
        int c = g.edge_color(vertices[i], vertices[(i + 1) % k]);
        if (c == 0) return false;
        cols[i] = c;
    }
    return detail::colors_properly_alternate(cols);
}

/// Directed variant; length-2 cycles (antiparallel arcs of distinct colors)
/// are admitted.
inline bool is_pc_cycle(const ColoredDigraph& d, std::span<const int> vertices) {
    const std::size_t k = vertices.size();
    if (k < 2) return false;
    if (!detail::all_distinct_in_range(vertices, d.order())) return false;
    std::vector<int> cols(k);
    for (std::size_t i = 0; i < k; ++i) {
        int c = d.arc_color(vertices[i], vertices[(i + 1) % k]);
        if (c == 0) return false;
        cols[i] = c;
    }
    return detail::colors_properly_alternate(cols);
}

inline bool is_pc_cycle(const ColoredGraph& g, const std::vector<int>& vertices) {
    return is_pc_cycle(g, std::span<const int>(vertices));
}
inline bool is_pc_cycle(const ColoredDigraph& d, const std::vector<int>& vertices) {
    return is_pc_cycle(d, std::span<const int>(vertices));
}

/// Certificate check: the cycle must be properly colored AND the recorded
/// colors must match the host graph.
inline bool validates(const ColoredGraph& g, const PcCycleCertificate& cert) {
    if (!is_pc_cycle(g, cert.vertices)) return false;
    if (cert.colors.size() != cert.vertices.size()) return false;
    const std::size_t k = cert.vertices.size();
    for (std::size_t i = 0; i < k; ++i)
        if (g.edge_color(cert.vertices[i], cert.vertices[(i + 1) % k]) != cert.colors[i]) return false;
    return true;
}

inline bool validates(const ColoredDigraph& d, const PcCycleCertificate& cert) {
    if (!is_pc_cycle(d, cert.vertices)) return false;
    if (cert.colors.size() != cert.vertices.size()) return false;
    const std::size_t k = cert.vertices.size();
    for (std::size_t i = 0; i < k; ++i)
        if (d.arc_color(cert.vertices[i], cert.vertices[(i + 1) % k]) != cert.colors[i]) return false;
    return true;
}

}  // namespace pcc
