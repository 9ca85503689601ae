#pragma once

// Command-line front end. One binary, subcommand style:
//   gen, order, check, decide, transform (double|merge), search, conjecture,
//   bounds, verify, export-dot
// Exit codes: 0 success, 2 errors. `decide` uses 0 = no PC cycle,
// 1 = PC cycle exists, 2 = error; `check --cycle` uses 1 for "not a PC
// cycle"; `verify` uses 1 for failed invariants. `--json` switches the
// report subcommands to machine-readable output.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcc/colored_graph.hpp"
#include "pcc/construct.hpp"
#include "pcc/detect.hpp"
#include "pcc/dot.hpp"
#include "pcc/io.hpp"
#include "pcc/search.hpp"
#include "pcc/transform.hpp"

namespace pcc::cli {

using nlohmann::json;

namespace detail {

inline json to_json(const ColoredGraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.color});
    return {{"mode", "undirected"}, {"n", g.order()}, {"c", g.colors()}, {"edges", edges}};
}

inline json to_json(const ColoredDigraph& d) {
    json arcs = json::array();
    for (const auto& a : d.arcs()) arcs.push_back({a.tail, a.head, a.color});
    return {{"mode", "directed"}, {"n", d.order()}, {"c", d.colors()}, {"arcs", arcs}};
}

inline json to_json(const PcCycleCertificate& c) {
    return {{"vertices", c.vertices}, {"colors", c.colors}};
}

inline json to_json(const EliminationCertificate& c) {
    json steps = json::array();
    for (const auto& s : c.steps) steps.push_back({{"vertex", s.vertex}, {"component", s.component}});
    return {{"steps", steps}, {"terminal_components", c.terminal_components}};
}

inline json to_json(const DetectionResult& r) {
    json j{{"pc_cycle_exists", r.pc_cycle_exists},
           {"cycle_certificate_declined", r.cycle_certificate_declined},
           {"stats", {{"steps", r.stats.steps}, {"nodes_explored", r.stats.nodes_explored}}}};
    j["cycle"] = r.cycle ? to_json(*r.cycle) : json(nullptr);
    j["elimination"] = r.elimination ? to_json(*r.elimination) : json(nullptr);
    return j;
}

inline void print_cycle(std::ostream& out, const PcCycleCertificate& c) {
    out << "cycle vertices:";
    for (int v : c.vertices) out << ' ' << v;
    out << ' ' << c.vertices.front() << "\ncycle colors:";
    for (int k : c.colors) out << ' ' << k;
    out << '\n';
}

inline void print_elimination(std::ostream& out, const EliminationCertificate& c) {
    for (const auto& s : c.steps) {
        out << "remove " << s.vertex << " from component {";
        for (std::size_t i = 0; i < s.component.size(); ++i)
            out << (i ? " " : "") << s.component[i];
        out << "}\n";
    }
    for (const auto& t : c.terminal_components) {
        out << "terminal component {";
        for (std::size_t i = 0; i < t.size(); ++i) out << (i ? " " : "") << t[i];
        out << "}\n";
    }
}

inline void write_text_or_stdout(const std::string& path, const std::string& text,
                                 std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << text;
    if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace detail

/// Dispatches argv (without the program name) and returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"properly colored cycle toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "build the recursive PC-cycle-free construction G(p1,...,pc)");
    std::vector<int> gen_params;
    int gen_base = 1;
    std::string gen_out;
    gen->add_option("--params", gen_params, "coordinates p1,p2,...")->required()->delimiter(',');
    gen->add_option("--base", gen_base, "order of the edgeless base graph (default 1)");
    gen->add_option("-o,--out", gen_out, "output .pcg path (stdout if omitted)");

    // order
    auto* order = app.add_subcommand("order", "order/edge count and order bounds of G(p1,...,pc)");
    std::vector<int> order_params;
    int order_base = 1;
    bool order_json = false;
    order->add_option("--params", order_params)->required()->delimiter(',');
    order->add_option("--base", order_base);
    order->add_flag("--json", order_json);

    // check
    auto* check = app.add_subcommand("check", "validate a .pcg file; optionally test a cycle");
    std::string check_file;
    std::vector<int> check_cycle;
    bool check_json = false;
    check->add_option("file", check_file)->required();
    check->add_option("--cycle", check_cycle, "vertex sequence v0,v1,...")->delimiter(',');
    check->add_flag("--json", check_json);

    // decide
    auto* decide = app.add_subcommand("decide", "does the graph have a properly colored cycle?");
    std::string decide_file;
    bool decide_cert = false, decide_json = false;
    int decide_max_n = -1;
    decide->add_option("file", decide_file)->required();
    decide->add_flag("--certificate", decide_cert, "extract/print a certificate");
    decide->add_option("--max-n", decide_max_n,
                       "exhaustive-search size limit (cycle extraction / directed mode)");
    decide->add_flag("--json", decide_json);

    // transform double|merge
    auto* transform = app.add_subcommand("transform", "graph transformations");
    transform->require_subcommand(1);
    auto* tdouble = transform->add_subcommand("double", "undirected H -> bidirected H*");
    auto* tmerge = transform->add_subcommand("merge", "c-colored digraph -> 2-colored digraph");
    std::string tdouble_in, tdouble_out, tmerge_in, tmerge_out;
    tdouble->add_option("file", tdouble_in)->required();
    tdouble->add_option("-o,--out", tdouble_out, "output path (stdout if omitted)");
    tmerge->add_option("file", tmerge_in)->required();
    tmerge->add_option("-o,--out", tmerge_out, "output path (stdout if omitted)");

    // search
    auto* search = app.add_subcommand("search", "exact max delta over PC-cycle-free instances");
    SearchOptions sopts;
    std::string search_out = "witness.pcg";
    bool search_json = false;
    search->add_option("--n", sopts.n, "order")->required();
    search->add_option("--c", sopts.c, "number of colors");
    search->add_flag("--directed", sopts.directed);
    search->add_option("--threads", sopts.threads);
    search->add_flag("--force", sopts.force, "override the feasibility guard");
    search->add_option("-o,--out", search_out, "witness output path");
    search->add_flag("--json", search_json);

    // conjecture
    auto* conj = app.add_subcommand("conjecture", "check the min{n,cd} cycle-length claim");
    std::string conj_file;
    int conj_max_n = 10;
    bool conj_json = false;
    conj->add_option("file", conj_file)->required();
    conj->add_option("--max-n", conj_max_n, "longest-cycle search limit (default 10)");
    conj->add_flag("--json", conj_json);

    // bounds
    auto* bounds = app.add_subcommand("bounds", "evaluate the threshold bound formulas at n");
    double bounds_n = 0;
    int bounds_c = 2;
    double bounds_c0 = 0.0;
    bool bounds_json = false;
    bounds->add_option("--n", bounds_n)->required();
    bounds->add_option("--c", bounds_c);
    bounds->add_option("--c0", bounds_c0, "stand-in for the additive Theta(1) terms");
    bounds->add_flag("--json", bounds_json);

    // verify
    auto* verify = app.add_subcommand("verify", "run the cross-module invariant suites");
    VerifyOptions vopts;
    bool verify_json = false;
    verify->add_option("--max-sum", vopts.max_sum, "max coordinate sum (default 4)");
    verify->add_option("--colors", vopts.colors, "color counts (default 2,3)")->delimiter(',');
    verify->add_option("--bases", vopts.bases, "base orders (default 1)")->delimiter(',');
    verify->add_option("--seed", vopts.seed, "seed for the random corpora");
    verify->add_option("--samples", vopts.samples, "instances per randomized check");
    verify->add_option("--dump-dir", vopts.dump_dir, "where failing cases are written");
    verify->add_flag("--json", verify_json);

    // export-dot
    auto* dot = app.add_subcommand("export-dot", "write the graph in Graphviz DOT format");
    std::string dot_file, dot_out;
    dot->add_option("file", dot_file)->required();
    dot->add_option("-o,--out", dot_out, "output path (stdout if omitted)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("pcc");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (*gen) {
            ColoredGraph g = build(ParamVector(gen_params), {gen_base});
            detail::write_text_or_stdout(gen_out, serialize_pcg(g), out);
            return 0;
        }

        if (*order) {
            ParamVector p(order_params);
            BigInt n = order_of(p, order_base);
            BigInt m = edge_count_of(p, order_base);
            const int s = p.sum();
            if (order_json) {
                json j{{"params", order_params}, {"base", order_base},
                       {"order", n.str()},      {"edges", m.str()}};
                j["bound_s_c_s"] = s >= 1 ? json(lemma_order_bound(s, p.colors()).str()) : json(nullptr);
                j["bound_s_2_s"] = s >= 1 ? json(two_power_bound(s).str()) : json(nullptr);
                out << j.dump(2) << '\n';
            } else {
                out << "order " << n << "\nedges " << m << '\n';
                if (s >= 1)
                    out << "s*c^s " << lemma_order_bound(s, p.colors()) << "\ns*2^s "
                        << two_power_bound(s) << '\n';
            }
            return 0;
        }

        if (*check) {
            AnyGraph g = load_pcg(check_file);
            const bool directed = std::holds_alternative<ColoredDigraph>(g);
            json j = std::visit([&](const auto& x) { return detail::to_json(x); }, g);
            int dmon = -1;
            std::visit(
                [&](const auto& x) {
                    if (x.order() == 0) return;
                    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, ColoredGraph>)
                        dmon = delta_mon(x);
                    else
                        dmon = delta_out_mon(x);
                },
                g);
            bool cycle_given = !check_cycle.empty();
            bool cycle_ok = false;
            if (cycle_given)
                cycle_ok = std::visit([&](const auto& x) { return is_pc_cycle(x, check_cycle); }, g);
            if (check_json) {
                j["delta_mon"] = dmon >= 0 ? json(dmon) : json(nullptr);
                if (cycle_given) j["pc_cycle"] = cycle_ok;
                out << j.dump(2) << '\n';
            } else {
                out << (directed ? "directed" : "undirected") << " n=" << j["n"] << " c=" << j["c"]
                    << " " << (directed ? "arcs=" : "edges=")
                    << (directed ? j["arcs"].size() : j["edges"].size());
                if (dmon >= 0) out << " delta_mon=" << dmon;
                out << '\n';
                if (cycle_given)
                    out << "pc-cycle: " << (cycle_ok ? "valid" : "invalid") << '\n';
            }
            return cycle_given && !cycle_ok ? 1 : 0;
        }

        if (*decide) {
            AnyGraph g = load_pcg(decide_file);
            DetectionResult res;
            if (auto* und = std::get_if<ColoredGraph>(&g)) {
                DecideOptions dopts;
                dopts.want_cycle_certificate = decide_cert;
                if (decide_max_n > 0) dopts.extraction_max_n = decide_max_n;
                res = decide_pc_undirected(*und, dopts);
            } else {
                DirectedSearchOptions dopts;
                if (decide_max_n > 0) dopts.max_n = decide_max_n;
                res = find_pc_cycle_directed(std::get<ColoredDigraph>(g), dopts);
            }
            if (decide_json) {
                out << detail::to_json(res).dump(2) << '\n';
            } else {
                out << "pc-cycle: " << (res.pc_cycle_exists ? "exists" : "none") << '\n';
                if (decide_cert) {
                    if (res.cycle)
                        detail::print_cycle(out, *res.cycle);
                    else if (res.cycle_certificate_declined)
                        out << "verdict without cycle certificate (component exceeds --max-n)\n";
                    else if (res.elimination)
                        detail::print_elimination(out, *res.elimination);
                }
            }
            return res.pc_cycle_exists ? 1 : 0;
        }

        if (*tdouble) {
            AnyGraph g = load_pcg(tdouble_in);
            auto* und = std::get_if<ColoredGraph>(&g);
            if (!und) throw std::invalid_argument("transform double expects an undirected graph");
            detail::write_text_or_stdout(tdouble_out, serialize_pcg(bidirect(*und)), out);
            return 0;
        }

        if (*tmerge) {
            AnyGraph g = load_pcg(tmerge_in);
            auto* dir = std::get_if<ColoredDigraph>(&g);
            if (!dir) throw std::invalid_argument("transform merge expects a digraph");
            detail::write_text_or_stdout(tmerge_out, serialize_pcg(merge_colors(*dir)), out);
            return 0;
        }

        if (*search) {
            SearchReport rep = max_pcfree_delta(sopts);
            if (rep.witness_graph)
                save_pcg(*rep.witness_graph, search_out);
            else if (rep.witness_digraph)
                save_pcg(*rep.witness_digraph, search_out);
            if (search_json) {
                json j{{"mode", rep.directed ? "directed" : "undirected"},
                       {"n", rep.n},
                       {"c", rep.c},
                       {"max_delta", rep.max_delta},
                       {"d_exact", rep.d_exact},
                       {"examined", rep.examined},
                       {"witness_file", search_out}};
                j["witness"] = rep.witness_graph ? detail::to_json(*rep.witness_graph)
                                                 : detail::to_json(*rep.witness_digraph);
                out << j.dump(2) << '\n';
            } else {
                out << "mode " << (rep.directed ? "directed" : "undirected") << "\nn " << rep.n
                    << "\nc " << rep.c << "\nmax_delta " << rep.max_delta << "\nd_exact "
                    << rep.d_exact << "\nexamined " << rep.examined << "\nwitness " << search_out
                    << '\n';
            }
            return 0;
        }

        if (*conj) {
            AnyGraph g = load_pcg(conj_file);
            auto* und = std::get_if<ColoredGraph>(&g);
            if (!und) throw std::invalid_argument("conjecture expects an undirected graph");
            ConjectureReport rep = conjecture_report(*und, conj_max_n);
            if (conj_json) {
                json j{{"n", rep.n},
                       {"c", rep.c},
                       {"delta_mon", rep.delta},
                       {"claimed_length", rep.claimed_length},
                       {"pc_cycle_exists", rep.pc_cycle_exists},
                       {"longest_computed", rep.longest_computed},
                       {"verdict", to_string(rep.verdict)}};
                j["longest_length"] = rep.longest_length ? json(*rep.longest_length) : json(nullptr);
                j["observed_cycle"] =
                    rep.observed_cycle ? detail::to_json(*rep.observed_cycle) : json(nullptr);
                out << j.dump(2) << '\n';
            } else {
                out << "n " << rep.n << "\nc " << rep.c << "\ndelta_mon " << rep.delta
                    << "\nclaimed_length " << rep.claimed_length << "\nlongest ";
                if (rep.longest_length)
                    out << *rep.longest_length;
                else if (rep.pc_cycle_exists)
                    out << "exists (length not computed, n > " << conj_max_n << ")";
                else
                    out << "none";
                out << "\nverdict " << to_string(rep.verdict) << '\n';
            }
            return 0;
        }

        if (*bounds) {
            double lo = lower_bound_d(bounds_n, bounds_c);
            auto [gsy_lo, gsy_hi] = gsy_bounds(bounds_n, bounds_c0, bounds_c0);
            double merged = merged_upper_bound(bounds_n, bounds_c, bounds_c0);
            if (bounds_json) {
                json j{{"n", bounds_n},       {"c", bounds_c},         {"c0", bounds_c0},
                       {"lower_bound_d", lo}, {"gsy_lower", gsy_lo},   {"gsy_upper", gsy_hi},
                       {"merged_upper", merged}};
                out << j.dump(2) << '\n';
            } else {
                out << std::setprecision(12) << "lower_bound_d " << lo << "\ngsy_lower " << gsy_lo
                    << "\ngsy_upper " << gsy_hi << "\nmerged_upper " << merged << '\n';
            }
            return 0;
        }

        if (*verify) {
            VerifyReport rep = verify_suite(vopts);
            if (verify_json) {
                json checks = json::array();
                for (const auto& c : rep.checks)
                    checks.push_back({{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}});
                json j{{"checks", checks}, {"dumped_files", rep.dumped_files}, {"ok", rep.ok()}};
                out << j.dump(2) << '\n';
            } else {
                for (const auto& c : rep.checks)
                    out << (c.failures ? "FAIL" : "ok  ") << ' ' << c.name << "  cases=" << c.cases
                        << " failures=" << c.failures << '\n';
                for (const auto& f : rep.dumped_files) out << "dumped " << f << '\n';
                out << "RESULT " << (rep.ok() ? "pass" : "fail") << '\n';
            }
            return rep.ok() ? 0 : 1;
        }

        if (*dot) {
            AnyGraph g = load_pcg(dot_file);
            std::ostringstream oss;
            std::visit([&](const auto& x) { export_dot(x, oss); }, g);
            detail::write_text_or_stdout(dot_out, oss.str(), out);
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace pcc::cli
