#pragma once

// The recursive extremal construction G(p1,...,pc) and the closed-form
// bounds around it.
//
// G(p) is defined by: G(0,...,0) is an edgeless graph on b >= 1 vertices
// (b = 1 gives a single vertex); otherwise take a new root vertex x and,
// for each color i with p_i > 0, a recursively built H_i = G(p - e_i),
// joining x to every vertex of H_i by an edge of color i. The result has
// no properly colored cycle and delta_mon = min_i p_i.
//
// Vertex numbering is deterministic (root first, then H_1..H_c in color
// order, each numbered recursively), so builds are reproducible
// byte-for-byte. Orders grow like s*c^s, so the recurrences are evaluated
// in arbitrary precision, memoized over sorted coordinate multisets (the
// order recurrence is symmetric in the coordinates).

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pcc/colored_graph.hpp"

namespace pcc {

using BigInt = boost::multiprecision::cpp_int;

/// The coordinate vector (p1,...,pc) driving the construction.
class ParamVector {
public:
    explicit ParamVector(std::vector<int> p) : p_(std::move(p)) {
        if (p_.size() < 2) throw std::invalid_argument("need at least 2 colors");
        for (int x : p_)
            if (x < 0) throw std::invalid_argument("coordinates must be nonnegative");
    }

    int colors() const { return static_cast<int>(p_.size()); }
    int sum() const {
        int s = 0;
        for (int x : p_) s += x;
        return s;
    }
    const std::vector<int>& coords() const { return p_; }
    int operator[](std::size_t i) const { return p_[i]; }

private:
    std::vector<int> p_;
};

struct ConstructionOptions {
    int base_order = 1;  // order of the edgeless graph replacing G(0,...,0)
};

namespace detail {

inline void check_base(int b) {
    if (b < 1) throw std::invalid_argument("base order must be >= 1, got " + std::to_string(b));
}

struct Recurrences {
    int base;
    // keyed on the sorted coordinate multiset
    std::map<std::vector<int>, BigInt> order_memo;
    std::map<std::vector<int>, BigInt> edge_memo;

    BigInt order(std::vector<int> p) {
        std::sort(p.begin(), p.end());
        if (p.back() == 0) return base;
        auto it = order_memo.find(p);
        if (it != order_memo.end()) return it->second;
        BigInt tot = 1;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] == 0 || (i > 0 && p[i] == p[i - 1])) continue;  // identical subcalls collapse
            std::vector<int> q = p;
            --q[i];
            BigInt sub = order(std::move(q));
            // multiplicity of this coordinate value
            std::size_t mult = 1;
            for (std::size_t j = i + 1; j < p.size() && p[j] == p[i]; ++j) ++mult;
            tot += sub * static_cast<unsigned>(mult);
        }
        order_memo.emplace(std::move(p), tot);
        return tot;
    }

    BigInt edges(std::vector<int> p) {
        std::sort(p.begin(), p.end());
        if (p.back() == 0) return 0;
        auto it = edge_memo.find(p);
        if (it != edge_memo.end()) return it->second;
        BigInt tot = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] == 0 || (i > 0 && p[i] == p[i - 1])) continue;
            std::vector<int> q = p;
            --q[i];
            std::size_t mult = 1;
            for (std::size_t j = i + 1; j < p.size() && p[j] == p[i]; ++j) ++mult;
            tot += (order(q) + edges(q)) * static_cast<unsigned>(mult);
        }
        edge_memo.emplace(std::move(p), tot);
        return tot;
    }
};

}  // namespace detail

/// n(p): order of G(p) with the given base order. Exact.
inline BigInt order_of(const ParamVector& p, int base_order = 1) {
    detail::check_base(base_order);
    detail::Recurrences rec{base_order, {}, {}};
    return rec.order(p.coords());
}

/// e(p): edge count of G(p); e(p) = sum over i with p_i > 0 of
/// n(p - e_i) + e(p - e_i).
inline BigInt edge_count_of(const ParamVector& p, int base_order = 1) {
    detail::check_base(base_order);
    detail::Recurrences rec{base_order, {}, {}};
    return rec.edges(p.coords());
}

/// Materializes G(p). Deterministic root-first numbering.
inline ColoredGraph build(const ParamVector& p, ConstructionOptions opts = {}) {
    detail::check_base(opts.base_order);
    BigInt n_big = order_of(p, opts.base_order);
    BigInt m_big = edge_count_of(p, opts.base_order);
    if (n_big + m_big > 50'000'000)
        throw std::invalid_argument("construction too large to materialize (" + n_big.str() +
                                    " vertices, " + m_big.str() + " edges)");
    const int n = static_cast<int>(n_big);
    std::vector<ColoredEdge> edges;
    edges.reserve(static_cast<std::size_t>(m_big));

    std::vector<int> coords = p.coords();
    // returns the number of vertices the subtree occupied starting at `start`
    auto rec = [&](auto&& self, int start) -> int {
        bool all_zero = true;
        for (int x : coords)
            if (x > 0) {
                all_zero = false;
                break;
            }
        if (all_zero) return opts.base_order;
        const int root = start;
        int idx = start + 1;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (coords[i] == 0) continue;
            --coords[i];
            int sub_n = self(self, idx);
            ++coords[i];
            for (int v = idx; v < idx + sub_n; ++v)
                edges.push_back({root, v, static_cast<int>(i) + 1});
            idx += sub_n;
        }
        return idx - start;
    };
    int built = rec(rec, 0);
    if (built != n) throw std::logic_error("construction size mismatch");  // unreachable
    return ColoredGraph(n, p.colors(), std::move(edges));
}

/// s*c^s, the order bound the recurrence argument actually yields.
inline BigInt lemma_order_bound(int s, int c) {
    if (s < 1) throw std::invalid_argument("s must be >= 1");
    if (c < 2) throw std::invalid_argument("c must be >= 2");
    BigInt pw = 1;
    for (int i = 0; i < s; ++i) pw *= c;
    return pw * s;
}

/// s*2^s, for side-by-side reporting with lemma_order_bound.
inline BigInt two_power_bound(int s) {
    if (s < 1) throw std::invalid_argument("s must be >= 1");
    return BigInt(s) * (BigInt(1) << s);
}

/// (1/c)(log_c n - log_c log_c n), the lower bound on d(n,c).
inline double lower_bound_d(double n, int c) {
    if (c < 2) throw std::invalid_argument("c must be >= 2");
    if (!(n > c)) throw std::domain_error("lower_bound_d needs n > c");
    const double logc = std::log(static_cast<double>(c));
    const double ln = std::log(n) / logc;      // log_c n, > 1
    const double lln = std::log(ln) / logc;    // log_c log_c n
    return (ln - lln) / c;
}

/// The (lower, upper) bounds on the directed 2-color threshold:
/// (1/4 log2 n + 1/8 log2 log2 n + c_low, log2 n - 1/3 log2 log2 n + c_high).
/// c_low/c_high stand in for the unspecified additive constants.
inline std::pair<double, double> gsy_bounds(double n, double c_low = 0.0, double c_high = 0.0) {
    if (!(n >= 4)) throw std::domain_error("gsy_bounds needs n >= 4");
    const double l2 = std::log2(n);
    const double ll2 = std::log2(l2);
    return {l2 / 4.0 + ll2 / 8.0 + c_low, l2 - ll2 / 3.0 + c_high};
}

/// (1/floor(c/2)) (log2 n - 1/3 log2 log2 n + c0), the color-merge upper
/// bound on the directed threshold.
inline double merged_upper_bound(double n, int c, double c0 = 0.0) {
    if (c < 2) throw std::invalid_argument("c must be >= 2");
    if (!(n >= 4)) throw std::domain_error("merged_upper_bound needs n >= 4");
    const double l2 = std::log2(n);
    const double ll2 = std::log2(l2);
    return (l2 - ll2 / 3.0 + c0) / static_cast<double>(c / 2);
}

}  // namespace pcc
