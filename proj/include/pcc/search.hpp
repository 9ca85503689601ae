#pragma once

// Exact small-order computation of the extremal threshold functions and
// operational conjecture checking.
//
// max_pcfree_delta enumerates every assignment of {absent, 1..c} to the
// vertex pairs (ordered pairs in directed mode), keeps the maximum
// monochromatic (out-)degree over the PC-cycle-free instances together with
// the lexicographically smallest witness, and reports
// d_exact = 1 + maximum. The enumeration space is statically partitioned
// across threads; per-chunk results merge by (value, lexicographic witness)
// order, so reports are identical under any thread count.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "pcc/colored_graph.hpp"
#include "pcc/construct.hpp"
#include "pcc/cycle_enum.hpp"
#include "pcc/detect.hpp"
#include "pcc/io.hpp"
#include "pcc/random_graphs.hpp"
#include "pcc/transform.hpp"

namespace pcc {

struct SearchOptions {
    int n = 0;
    int c = 2;
    bool directed = false;
    int threads = 1;
    bool force = false;                          // override the feasibility guard
    std::uint64_t state_limit = 1'000'000'000;   // refuse larger spaces unless forced
};

struct SearchReport {
    int n = 0;
    int c = 0;
    bool directed = false;
    int max_delta = -1;
    int d_exact = 0;  // = max_delta + 1
    std::uint64_t examined = 0;
    std::optional<ColoredGraph> witness_graph;
    std::optional<ColoredDigraph> witness_digraph;
};

namespace detail {

// (c+1)^k, or nullopt on uint64 overflow
inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, int exp) {
    unsigned __int128 v = 1;
    for (int i = 0; i < exp; ++i) {
        v *= base;
        if (v > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    }
    return static_cast<std::uint64_t>(v);
}

struct UndirectedChunkBest {
    int best = -1;
    std::vector<ColoredEdge> witness;
};
struct DirectedChunkBest {
    int best = -1;
    std::vector<ColoredArc> witness;
};

inline void scan_undirected_chunk(int n, int c, std::uint64_t from, std::uint64_t to,
                                  UndirectedChunkBest& out) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    const int np = static_cast<int>(pairs.size());
    const std::uint64_t radix = static_cast<std::uint64_t>(c) + 1;

    std::vector<int> digit(static_cast<std::size_t>(np), 0);
    std::uint64_t rem = from;
    for (int j = 0; j < np; ++j) {
        digit[static_cast<std::size_t>(j)] = static_cast<int>(rem % radix);
        rem /= radix;
    }

    std::vector<int8_t> mat(static_cast<std::size_t>(n) * n);
    std::vector<int> counts(static_cast<std::size_t>(n) * c);
    auto color_at = [&](int u, int v) { return mat[static_cast<std::size_t>(u) * n + v]; };

    for (std::uint64_t idx = from; idx < to; ++idx) {
        std::fill(counts.begin(), counts.end(), 0);
        std::fill(mat.begin(), mat.end(), 0);
        for (int j = 0; j < np; ++j) {
            int k = digit[static_cast<std::size_t>(j)];
            if (k) {
                auto [u, v] = pairs[static_cast<std::size_t>(j)];
                mat[static_cast<std::size_t>(u) * n + v] = static_cast<int8_t>(k);
                mat[static_cast<std::size_t>(v) * n + u] = static_cast<int8_t>(k);
                ++counts[static_cast<std::size_t>(u) * c + (k - 1)];
                ++counts[static_cast<std::size_t>(v) * c + (k - 1)];
            }
        }
        int delta = counts.empty() ? 0 : *std::min_element(counts.begin(), counts.end());
        // instances below the chunk maximum can neither raise it nor tie it
        if (delta >= out.best) {
            bool has_cycle = false;
            for_each_pc_cycle(
                n, color_at,
                [&](const std::vector<int>&, const std::vector<int>&) {
                    has_cycle = true;
                    return Walk::Stop;
                });
            if (!has_cycle) {
                std::vector<ColoredEdge> edges;
                for (int j = 0; j < np; ++j)
                    if (int k = digit[static_cast<std::size_t>(j)])
                        edges.push_back({pairs[static_cast<std::size_t>(j)].first,
                                         pairs[static_cast<std::size_t>(j)].second, k});
                if (delta > out.best ||
                    (delta == out.best &&
                     std::lexicographical_compare(edges.begin(), edges.end(), out.witness.begin(),
                                                  out.witness.end())))
                    out = {delta, std::move(edges)};
            }
        }
        // odometer
        for (int j = 0; j < np; ++j) {
            if (++digit[static_cast<std::size_t>(j)] < static_cast<int>(radix)) break;
            digit[static_cast<std::size_t>(j)] = 0;
        }
    }
}

inline void scan_directed_chunk(int n, int c, std::uint64_t from, std::uint64_t to,
                                DirectedChunkBest& out) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) pairs.push_back({u, v});
    const int np = static_cast<int>(pairs.size());
    const std::uint64_t radix = static_cast<std::uint64_t>(c) + 1;

    std::vector<int> digit(static_cast<std::size_t>(np), 0);
    std::uint64_t rem = from;
    for (int j = 0; j < np; ++j) {
        digit[static_cast<std::size_t>(j)] = static_cast<int>(rem % radix);
        rem /= radix;
    }

    std::vector<int8_t> mat(static_cast<std::size_t>(n) * n);
    std::vector<int> counts(static_cast<std::size_t>(n) * c);
    auto color_at = [&](int u, int v) { return mat[static_cast<std::size_t>(u) * n + v]; };

    for (std::uint64_t idx = from; idx < to; ++idx) {
        std::fill(counts.begin(), counts.end(), 0);
        std::fill(mat.begin(), mat.end(), 0);
        for (int j = 0; j < np; ++j) {
            int k = digit[static_cast<std::size_t>(j)];
            if (k) {
                auto [u, v] = pairs[static_cast<std::size_t>(j)];
                mat[static_cast<std::size_t>(u) * n + v] = static_cast<int8_t>(k);
                ++counts[static_cast<std::size_t>(u) * c + (k - 1)];  // out-degree at the tail
            }
        }
        int delta = counts.empty() ? 0 : *std::min_element(counts.begin(), counts.end());
        if (delta >= out.best) {
            bool has_cycle = false;
            for_each_pc_dicycle(
                n, color_at,
                [&](const std::vector<int>&, const std::vector<int>&) {
                    has_cycle = true;
                    return Walk::Stop;
                });
            if (!has_cycle) {
                std::vector<ColoredArc> arcs;
                for (int j = 0; j < np; ++j)
                    if (int k = digit[static_cast<std::size_t>(j)])
                        arcs.push_back({pairs[static_cast<std::size_t>(j)].first,
                                        pairs[static_cast<std::size_t>(j)].second, k});
                if (delta > out.best ||
                    (delta == out.best &&
                     std::lexicographical_compare(arcs.begin(), arcs.end(), out.witness.begin(),
                                                  out.witness.end())))
                    out = {delta, std::move(arcs)};
            }
        }
        for (int j = 0; j < np; ++j) {
            if (++digit[static_cast<std::size_t>(j)] < static_cast<int>(radix)) break;
            digit[static_cast<std::size_t>(j)] = 0;
        }
    }
}

}  // namespace detail

/// Exhaustive computation of max delta over PC-cycle-free instances of
/// order n with c colors; d_exact = max + 1 realizes the threshold
/// function. Witness ties broken by lexicographic serialized edge list.
inline SearchReport max_pcfree_delta(const SearchOptions& opts) {
    if (opts.n < 1) throw std::invalid_argument("search needs n >= 1");
    if (opts.c < 2) throw std::invalid_argument("search needs c >= 2");
    const int np = opts.directed ? opts.n * (opts.n - 1) : opts.n * (opts.n - 1) / 2;
    auto total_opt = detail::checked_pow(static_cast<std::uint64_t>(opts.c) + 1, np);
    if (!total_opt)
        throw std::invalid_argument("enumeration space exceeds 2^64 states; refusing");
    const std::uint64_t total = *total_opt;
    if (total > opts.state_limit && !opts.force)
        throw std::invalid_argument(
            "enumeration space " + std::to_string(total) + " exceeds the feasibility guard " +
            std::to_string(opts.state_limit) + " (use force to override)");

    const int threads = std::max(1, opts.threads);
    SearchReport rep;
    rep.n = opts.n;
    rep.c = opts.c;
    rep.directed = opts.directed;
    rep.examined = total;

    if (!opts.directed) {
        std::vector<detail::UndirectedChunkBest> parts(static_cast<std::size_t>(threads));
        if (threads == 1) {
            detail::scan_undirected_chunk(opts.n, opts.c, 0, total, parts[0]);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) {
                std::uint64_t lo = total / threads * t + std::min<std::uint64_t>(t, total % threads);
                std::uint64_t hi =
                    total / threads * (t + 1) + std::min<std::uint64_t>(t + 1, total % threads);
                pool.emplace_back(detail::scan_undirected_chunk, opts.n, opts.c, lo, hi,
                                  std::ref(parts[static_cast<std::size_t>(t)]));
            }
            for (auto& th : pool) th.join();
        }
        detail::UndirectedChunkBest best;
        for (auto& p : parts) {
            if (p.best > best.best ||
                (p.best == best.best && p.best >= 0 &&
                 std::lexicographical_compare(p.witness.begin(), p.witness.end(),
                                              best.witness.begin(), best.witness.end())))
                best = std::move(p);
        }
        rep.max_delta = best.best;
        rep.d_exact = best.best + 1;
        rep.witness_graph = ColoredGraph(opts.n, opts.c, std::move(best.witness));
    } else {
        std::vector<detail::DirectedChunkBest> parts(static_cast<std::size_t>(threads));
        if (threads == 1) {
            detail::scan_directed_chunk(opts.n, opts.c, 0, total, parts[0]);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) {
                std::uint64_t lo = total / threads * t + std::min<std::uint64_t>(t, total % threads);
                std::uint64_t hi =
                    total / threads * (t + 1) + std::min<std::uint64_t>(t + 1, total % threads);
                pool.emplace_back(detail::scan_directed_chunk, opts.n, opts.c, lo, hi,
                                  std::ref(parts[static_cast<std::size_t>(t)]));
            }
            for (auto& th : pool) th.join();
        }
        detail::DirectedChunkBest best;
        for (auto& p : parts) {
            if (p.best > best.best ||
                (p.best == best.best && p.best >= 0 &&
                 std::lexicographical_compare(p.witness.begin(), p.witness.end(),
                                              best.witness.begin(), best.witness.end())))
                best = std::move(p);
        }
        rep.max_delta = best.best;
        rep.d_exact = best.best + 1;
        rep.witness_digraph = ColoredDigraph(opts.n, opts.c, std::move(best.witness));
    }
    return rep;
}

// ---------------------------------------------------------------------------

struct ConjectureReport {
    enum class Verdict { Consistent, Violated, NotApplicable };

    int n = 0;
    int c = 0;
    int delta = 0;           // delta_mon of the input
    int claimed_length = 0;  // min{n, cd} (c = 2) or min{n, cd+1} (c > 2)
    bool pc_cycle_exists = false;
    bool longest_computed = false;
    std::optional<int> longest_length;
    std::optional<PcCycleCertificate> observed_cycle;
    Verdict verdict = Verdict::NotApplicable;
};

inline const char* to_string(ConjectureReport::Verdict v) {
    switch (v) {
        case ConjectureReport::Verdict::Consistent: return "consistent";
        case ConjectureReport::Verdict::Violated: return "violated";
        default: return "not-applicable";
    }
}

/// Checks the "PC cycle of length at least min{n, cd}" claim (strengthened
/// to cd+1 for c > 2) against the observed longest PC cycle. Above
/// max_n_for_longest the check degrades to existence only.
inline ConjectureReport conjecture_report(const ColoredGraph& g, int max_n_for_longest = 10) {
    ConjectureReport rep;
    rep.n = g.order();
    rep.c = g.colors();
    rep.delta = g.order() ? delta_mon(g) : 0;
    long long cd = static_cast<long long>(rep.c) * rep.delta + (rep.c > 2 ? 1 : 0);
    rep.claimed_length = static_cast<int>(std::min<long long>(rep.n, cd));

    if (g.order() <= max_n_for_longest) {
        rep.longest_computed = true;
        rep.observed_cycle = longest_pc_cycle(g, max_n_for_longest);
        rep.pc_cycle_exists = rep.observed_cycle.has_value();
        if (rep.observed_cycle) rep.longest_length = rep.observed_cycle->length();
    } else {
        rep.pc_cycle_exists = decide_pc_undirected(g).pc_cycle_exists;
    }

    if (rep.claimed_length < 3) {
        rep.verdict = ConjectureReport::Verdict::NotApplicable;  // undirected cycles have length >= 3
    } else if (!rep.pc_cycle_exists ||
               (rep.longest_computed && *rep.longest_length < rep.claimed_length)) {
        rep.verdict = ConjectureReport::Verdict::Violated;
    } else {
        rep.verdict = ConjectureReport::Verdict::Consistent;
    }
    return rep;
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
    int max_sum = 4;
    std::vector<int> colors = {2, 3};
    std::vector<int> bases = {1};
    std::uint64_t seed = 1;
    int samples = 200;          // per randomized check
    std::string dump_dir = ".";
    int max_dumps = 5;
    // test hook: replaces each built construction before checking
    std::function<ColoredGraph(const ColoredGraph&, const ParamVector&, int)> construction_mutator;
};

struct VerifyCheck {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    std::vector<std::string> dumped_files;
    bool ok() const {
        for (const auto& c : checks)
            if (c.failures) return false;
        return true;
    }
};

namespace detail {

inline void enumerate_vectors(int c, int sum, std::vector<int>& cur,
                              const std::function<void(const std::vector<int>&)>& fn) {
    if (static_cast<int>(cur.size()) == c - 1) {
        cur.push_back(sum);
        fn(cur);
        cur.pop_back();
        return;
    }
    for (int x = 0; x <= sum; ++x) {
        cur.push_back(x);
        enumerate_vectors(c, sum - x, cur, fn);
        cur.pop_back();
    }
}

struct VerifyContext {
    const VerifyOptions& opts;
    VerifyReport& rep;
    int dumps = 0;

    VerifyCheck& row(const std::string& name) {
        for (auto& c : rep.checks)
            if (c.name == name) return c;
        rep.checks.push_back({name, 0, 0});
        return rep.checks.back();
    }

    template <class G>
    void record(const std::string& name, bool ok, const G& failing) {
        auto& r = row(name);
        ++r.cases;
        if (!ok) {
            ++r.failures;
            if (dumps < opts.max_dumps) {
                std::string path = opts.dump_dir + "/verify_fail_" + name + "_" +
                                   std::to_string(dumps) + ".pcg";
                try {
                    save_pcg(failing, path);
                    rep.dumped_files.push_back(path);
                } catch (const std::exception&) {
                    // a failed dump must not mask the check failure itself
                }
                ++dumps;
            }
        }
    }
};

}  // namespace detail

/// One-shot runner for the cross-module invariants: construction laws,
/// decider-vs-oracle equivalence, certificate soundness, and the two
/// transformation laws. Any failing instance is serialized to dump_dir.
inline VerifyReport verify_suite(const VerifyOptions& opts) {
    VerifyReport rep;
    if (opts.colors.empty() || opts.max_sum < 0) return rep;  // empty limits, empty report
    detail::VerifyContext ctx{opts, rep};

    // construction family
    for (int c : opts.colors) {
        std::vector<std::vector<int>> family;
        std::vector<int> cur;
        for (int s = 0; s <= opts.max_sum; ++s)
            detail::enumerate_vectors(c, s, cur,
                                      [&](const std::vector<int>& p) { family.push_back(p); });
        for (const auto& pv : family) {
            ParamVector p(pv);
            for (int b : opts.bases) {
                ColoredGraph g = build(p, {b});
                if (opts.construction_mutator) g = opts.construction_mutator(g, p, b);

                bool order_ok = BigInt(g.order()) == order_of(p, b) &&
                                BigInt(g.edge_count()) == edge_count_of(p, b);
                ctx.record("construct-order-agreement", order_ok, g);

                int min_p = *std::min_element(pv.begin(), pv.end());
                ctx.record("construct-delta-law", delta_mon(g) == min_p, g);

                auto det = decide_pc_undirected(g);
                bool pcfree_ok = !det.pc_cycle_exists && det.elimination &&
                                 replay_elimination(g, *det.elimination);
                ctx.record("construct-pc-free", pcfree_ok, g);

                if (int s = p.sum(); s >= 1 && b == 1) {
                    ctx.record("construct-lemma-bound", order_of(p, 1) <= lemma_order_bound(s, c),
                               g);
                }
            }
        }
    }

    // decider vs brute force on random instances
    {
        std::mt19937_64 rng(opts.seed);
        for (int i = 0; i < opts.samples; ++i) {
            int n = 3 + static_cast<int>(rnd::bounded(rng, 6));  // 3..8
            int c = 2 + static_cast<int>(rnd::bounded(rng, 2));  // 2..3
            ColoredGraph g = random_colored_graph(n, c, rnd::unit(rng), rng);
            auto slow = find_pc_cycle_exhaustive(g, {.shortest = false, .max_n = 8});
            auto fast = decide_pc_undirected(g, {.want_cycle_certificate = true});
            bool agree = slow.pc_cycle_exists == fast.pc_cycle_exists;
            ctx.record("detect-oracle-equivalence", agree, g);

            bool cert_ok = true;
            if (fast.pc_cycle_exists) {
                cert_ok = fast.cycle && validates(g, *fast.cycle);
            } else {
                cert_ok = fast.elimination && replay_elimination(g, *fast.elimination);
            }
            if (slow.pc_cycle_exists && !(slow.cycle && validates(g, *slow.cycle))) cert_ok = false;
            ctx.record("detect-certificates", cert_ok, g);
        }
    }

    // doubling: PC(H) <=> PC(H*), and out-color-degrees match
    {
        std::mt19937_64 rng(opts.seed + 1);
        for (int i = 0; i < opts.samples; ++i) {
            int n = 2 + static_cast<int>(rnd::bounded(rng, 6));  // 2..7
            int c = 2 + static_cast<int>(rnd::bounded(rng, 2));
            ColoredGraph h = random_colored_graph(n, c, rnd::unit(rng), rng);
            ColoredDigraph hstar = bidirect(h);
            bool und = find_pc_cycle_exhaustive(h, {.max_n = 7}).pc_cycle_exists;
            bool dir = find_pc_cycle_directed(hstar, {.max_n = 7}).pc_cycle_exists;
            bool ok = und == dir && hstar.arc_count() == 2 * h.edge_count();
            for (int v = 0; ok && v < n; ++v)
                for (int k = 1; k <= c; ++k)
                    if (color_degree(h, v, k) != color_degree(hstar, v, k)) ok = false;
            ctx.record("transform-double", ok, h);
        }
    }

    // merge: forward cycle preservation, degree bound, idempotence at c = 2
    {
        std::mt19937_64 rng(opts.seed + 2);
        for (int i = 0; i < opts.samples; ++i) {
            int n = 2 + static_cast<int>(rnd::bounded(rng, 5));  // 2..6
            int c = 4;
            ColoredDigraph d = random_colored_digraph(n, c, rnd::unit(rng), rng);
            ColoredDigraph merged = merge_colors(d);
            bool ok = merged.arc_count() == d.arc_count() && merged.colors() == 2;
            for_each_pc_dicycle(
                merged.order(), [&](int u, int v) { return merged.arc_color(u, v); },
                [&](const std::vector<int>& vs, const std::vector<int>&) {
                    if (!is_pc_cycle(d, vs)) ok = false;
                    return Walk::Continue;
                });
            if (n >= 1 && delta_out_mon(merged) < (c / 2) * delta_out_mon(d)) ok = false;
            if (!(merge_colors(merged) == merged)) ok = false;
            ctx.record("transform-merge", ok, d);
        }
    }

    return rep;
}

}  // namespace pcc
