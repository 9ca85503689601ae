#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pcc/construct.hpp"
#include "pcc/detect.hpp"
#include "pcc/random_graphs.hpp"

using namespace pcc;

static ColoredGraph alternating_c4() {
    return ColoredGraph(4, 2, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {0, 3, 2}});
}

TEST_CASE("decide_pc_undirected verdicts", "[detect]") {
    CHECK(decide_pc_undirected(alternating_c4()).pc_cycle_exists);
    CHECK_FALSE(
        decide_pc_undirected(ColoredGraph(3, 2, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}})).pc_cycle_exists);
    CHECK_FALSE(decide_pc_undirected(ColoredGraph(0, 2, {})).pc_cycle_exists);
    CHECK_FALSE(decide_pc_undirected(build(ParamVector({2, 2}))).pc_cycle_exists);
}

TEST_CASE("elimination certificate of G(1,1)", "[detect]") {
    ColoredGraph g = build(ParamVector({1, 1}));
    auto res = decide_pc_undirected(g);
    REQUIRE_FALSE(res.pc_cycle_exists);
    REQUIRE(res.elimination);
    const auto& cert = *res.elimination;
    // the root separates, leaving two 2-vertex components: 3 records in all
    REQUIRE(cert.steps.size() == 1);
    CHECK(cert.steps[0].vertex == 0);
    CHECK(cert.steps[0].component == std::vector<int>{0, 1, 2, 3, 4});
    REQUIRE(cert.terminal_components.size() == 2);
    CHECK(cert.terminal_components[0] == std::vector<int>{1, 2});
    CHECK(cert.terminal_components[1] == std::vector<int>{3, 4});
    CHECK(replay_elimination(g, cert));

    SECTION("tampered certificates fail to replay") {
        auto bad = cert;
        bad.steps[0].vertex = 1;
        CHECK_FALSE(replay_elimination(g, bad));
        auto bad2 = cert;
        bad2.terminal_components.pop_back();
        CHECK_FALSE(replay_elimination(g, bad2));
    }
}

TEST_CASE("cycle extraction from a positive decide", "[detect]") {
    ColoredGraph g = alternating_c4();
    auto res = decide_pc_undirected(g, {.want_cycle_certificate = true});
    REQUIRE(res.pc_cycle_exists);
    REQUIRE(res.cycle);
    CHECK(validates(g, *res.cycle));
    CHECK_FALSE(res.cycle_certificate_declined);

    SECTION("extraction declined above the size limit") {
        auto declined =
            decide_pc_undirected(g, {.want_cycle_certificate = true, .extraction_max_n = 2});
        CHECK(declined.pc_cycle_exists);
        CHECK_FALSE(declined.cycle);
        CHECK(declined.cycle_certificate_declined);
    }
}

TEST_CASE("exhaustive finder", "[detect]") {
    ColoredGraph tri(3, 3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}});
    auto res = find_pc_cycle_exhaustive(tri);
    REQUIRE(res.pc_cycle_exists);
    CHECK(res.cycle->length() == 3);
    CHECK(validates(tri, *res.cycle));

    // the construction stays PC-free even above the default limit
    ColoredGraph g22 = build(ParamVector({2, 2}));
    REQUIRE(g22.order() == 19);
    CHECK_FALSE(find_pc_cycle_exhaustive(g22, {.max_n = 19}).pc_cycle_exists);
    CHECK_THROWS_AS(find_pc_cycle_exhaustive(g22), std::invalid_argument);

    SECTION("shortest with deterministic tie-break") {
        // two disjoint alternating 4-cycles; the one on smaller labels wins
        ColoredGraph two(8, 2,
                         {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {0, 3, 2},
                          {4, 5, 1}, {5, 6, 2}, {6, 7, 1}, {4, 7, 2}});
        auto s = find_pc_cycle_exhaustive(two, {.shortest = true});
        REQUIRE(s.pc_cycle_exists);
        CHECK(s.cycle->vertices == std::vector<int>{0, 1, 2, 3});
        CHECK(s.cycle->colors == std::vector<int>{1, 2, 1, 2});

        // shortest really is shortest: add a rainbow triangle on top
        ColoredGraph mixed(7, 3,
                           {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {0, 3, 2},
                            {4, 5, 1}, {5, 6, 2}, {4, 6, 3}});
        auto s2 = find_pc_cycle_exhaustive(mixed, {.shortest = true});
        CHECK(s2.cycle->vertices == std::vector<int>{4, 5, 6});
    }
}

TEST_CASE("directed exhaustive finder", "[detect]") {
    ColoredDigraph two(2, 2, {{0, 1, 1}, {1, 0, 2}});
    auto res = find_pc_cycle_directed(two);
    REQUIRE(res.pc_cycle_exists);
    CHECK(res.cycle->vertices == std::vector<int>{0, 1});
    CHECK(validates(two, *res.cycle));

    CHECK_FALSE(find_pc_cycle_directed(ColoredDigraph(2, 2, {{0, 1, 1}, {1, 0, 1}})).pc_cycle_exists);
    CHECK_FALSE(
        find_pc_cycle_directed(ColoredDigraph(3, 2, {{0, 1, 1}, {1, 2, 2}, {2, 0, 1}})).pc_cycle_exists);

    ColoredDigraph big(11, 2, {});
    CHECK_THROWS_AS(find_pc_cycle_directed(big), std::invalid_argument);
    CHECK_NOTHROW(find_pc_cycle_directed(big, {.max_n = 11}));
}

TEST_CASE("longest_pc_cycle", "[detect]") {
    CHECK(longest_pc_cycle(alternating_c4())->length() == 4);
    CHECK_FALSE(longest_pc_cycle(build(ParamVector({1, 1}))).has_value());
    // 4-cycle plus rainbow triangle, disjoint: longest is the 4-cycle
    ColoredGraph mixed(7, 3,
                       {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {0, 3, 2},
                        {4, 5, 1}, {5, 6, 2}, {4, 6, 3}});
    auto best = longest_pc_cycle(mixed);
    REQUIRE(best);
    CHECK(best->length() == 4);
    CHECK(best->vertices == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("decider equals brute force on every 2-colored graph with n = 4",
          "[detect][oracle]") {
    const int n = 4;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    long long total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;
    for (long long idx = 0; idx < total; ++idx) {
        long long rem = idx;
        std::vector<ColoredEdge> edges;
        for (auto [u, v] : pairs) {
            int k = static_cast<int>(rem % 3);
            rem /= 3;
            if (k) edges.push_back({u, v, k});
        }
        ColoredGraph g(n, 2, std::move(edges));
        bool fast = decide_pc_undirected(g).pc_cycle_exists;
        bool slow = find_pc_cycle_exhaustive(g).pc_cycle_exists;
        REQUIRE(fast == slow);
    }
}

TEST_CASE("decider equals brute force on random instances", "[detect][oracle]") {
    std::mt19937_64 rng(321);
    for (int it = 0; it < 300; ++it) {
        int n = 3 + static_cast<int>(rnd::bounded(rng, 6));
        int c = 2 + static_cast<int>(rnd::bounded(rng, 2));
        ColoredGraph g = random_colored_graph(n, c, rnd::unit(rng), rng);
        auto fast = decide_pc_undirected(g, {.want_cycle_certificate = true});
        auto slow = find_pc_cycle_exhaustive(g, {.max_n = 8});
        REQUIRE(fast.pc_cycle_exists == slow.pc_cycle_exists);
        if (fast.pc_cycle_exists) {
            REQUIRE(fast.cycle);
            CHECK(validates(g, *fast.cycle));
            CHECK(validates(g, *slow.cycle));
        } else {
            REQUIRE(fast.elimination);
            CHECK(replay_elimination(g, *fast.elimination));
        }
    }
}

TEST_CASE("decider equals brute force at higher color counts", "[detect][oracle]") {
    std::mt19937_64 rng(77);
    for (int it = 0; it < 200; ++it) {
        int n = 3 + static_cast<int>(rnd::bounded(rng, 5));
        int c = 4 + static_cast<int>(rnd::bounded(rng, 2));  // 4..5
        ColoredGraph g = random_colored_graph(n, c, rnd::unit(rng), rng);
        REQUIRE(decide_pc_undirected(g).pc_cycle_exists ==
                find_pc_cycle_exhaustive(g, {.max_n = 7}).pc_cycle_exists);
    }
}

TEST_CASE("shortest/longest agree with full enumeration", "[detect][oracle]") {
    std::mt19937_64 rng(1234);
    for (int it = 0; it < 150; ++it) {
        int n = 3 + static_cast<int>(rnd::bounded(rng, 5));
        int c = 2 + static_cast<int>(rnd::bounded(rng, 2));
        ColoredGraph g = random_colored_graph(n, c, 0.3 + 0.6 * rnd::unit(rng), rng);
        std::vector<int> all_vertices(static_cast<std::size_t>(n));
        std::iota(all_vertices.begin(), all_vertices.end(), 0);

        // collect every PC cycle, then reduce by (length, lex) independently
        // of the pruning logic under test
        std::optional<std::vector<int>> min_seq, max_seq;
        for_each_pc_cycle(
            n, [&](int u, int v) { return g.edge_color(u, v); },
            [&](const std::vector<int>& vs, const std::vector<int>&) {
                if (!min_seq || vs.size() < min_seq->size() ||
                    (vs.size() == min_seq->size() && vs < *min_seq))
                    min_seq = vs;
                if (!max_seq || vs.size() > max_seq->size() ||
                    (vs.size() == max_seq->size() && vs < *max_seq))
                    max_seq = vs;
                return Walk::Continue;
            });

        auto shortest = find_pc_cycle_exhaustive(g, {.shortest = true, .max_n = 7});
        auto longest = longest_pc_cycle(g, 7);
        REQUIRE(shortest.pc_cycle_exists == min_seq.has_value());
        REQUIRE(longest.has_value() == max_seq.has_value());
        if (min_seq) CHECK(shortest.cycle->vertices == *min_seq);
        if (max_seq) CHECK(longest->vertices == *max_seq);
    }
}

TEST_CASE("absence is monotone under edge deletion", "[detect][property]") {
    std::mt19937_64 rng(99);
    int checked = 0;
    while (checked < 40) {
        int n = 4 + static_cast<int>(rnd::bounded(rng, 4));
        ColoredGraph g = random_colored_graph(n, 3, 0.4 + 0.4 * rnd::unit(rng), rng);
        if (decide_pc_undirected(g).pc_cycle_exists) continue;
        ++checked;
        auto edges = g.edges();
        for (std::size_t drop = 0; drop < edges.size(); ++drop) {
            auto sub = edges;
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
            CHECK_FALSE(decide_pc_undirected(ColoredGraph(n, 3, sub)).pc_cycle_exists);
        }
    }
}

TEST_CASE("construction family is PC-free", "[detect][property]") {
    for (int c : {2, 3}) {
        std::vector<std::vector<int>> family;
        std::vector<int> cur(static_cast<std::size_t>(c), 0);
        auto rec = [&](auto&& self, std::size_t i, int left) -> void {
            if (i == cur.size() - 1) {
                for (int x = 0; x <= left; ++x) {
                    cur[i] = x;
                    family.push_back(cur);
                }
                return;
            }
            for (int x = 0; x <= left; ++x) {
                cur[i] = x;
                self(self, i + 1, left - x);
            }
        };
        rec(rec, 0, 4);
        for (const auto& pv : family)
            for (int b : {1, 3}) {
                ColoredGraph g = build(ParamVector(pv), {b});
                auto res = decide_pc_undirected(g);
                CHECK_FALSE(res.pc_cycle_exists);
                REQUIRE(res.elimination);
                CHECK(replay_elimination(g, *res.elimination));
            }
    }
}
