#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pcc/cli.hpp"
#include "pcc/construct.hpp"
#include "pcc/io.hpp"

using namespace pcc;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TmpDir {
    fs::path path;
    TmpDir() : path(fs::path("cli_test_tmp")) { fs::create_directories(path); }
    ~TmpDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("order subcommand", "[cli]") {
    auto r = run_cli({"order", "--params", "2,2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("order 19") != std::string::npos);
    CHECK(r.out.find("edges 52") != std::string::npos);
    CHECK(r.out.find("s*c^s 64") != std::string::npos);
    CHECK(r.out.find("s*2^s 64") != std::string::npos);

    auto j = run_cli({"order", "--params", "3,3,3", "--json"});
    CHECK(j.code == 0);
    auto parsed = json::parse(j.out);
    CHECK(parsed["order"] == "5248");
    CHECK(parsed["edges"] == "40434");
    CHECK(parsed["bound_s_c_s"] == "177147");
    CHECK(parsed["bound_s_2_s"] == "4608");
}

TEST_CASE("gen then decide", "[cli]") {
    TmpDir tmp;
    auto g = run_cli({"gen", "--params", "0,0", "--base", "1", "-o", tmp.file("g.pcg")});
    REQUIRE(g.code == 0);
    auto d = run_cli({"decide", tmp.file("g.pcg")});
    CHECK(d.code == 0);
    CHECK(d.out.find("none") != std::string::npos);

    auto gen_stdout = run_cli({"gen", "--params", "1,1"});
    CHECK(gen_stdout.code == 0);
    CHECK(gen_stdout.out == serialize_pcg(build(ParamVector({1, 1}))));
}

TEST_CASE("decide exit codes and certificates", "[cli]") {
    TmpDir tmp;
    {
        std::ofstream f(tmp.file("c4.pcg"));
        f << "pcg u 4 2\n0 1 1\n0 3 2\n1 2 2\n2 3 1\n";
    }
    auto pos = run_cli({"decide", tmp.file("c4.pcg"), "--certificate"});
    CHECK(pos.code == 1);
    CHECK(pos.out.find("exists") != std::string::npos);
    CHECK(pos.out.find("cycle vertices: 0 1 2 3 0") != std::string::npos);

    auto jj = run_cli({"decide", tmp.file("c4.pcg"), "--json"});
    CHECK(jj.code == 1);
    auto parsed = json::parse(jj.out);
    CHECK(parsed["pc_cycle_exists"] == true);
    CHECK(parsed.contains("stats"));

    {
        std::ofstream f(tmp.file("mono.pcg"));
        f << "pcg u 3 2\n0 1 1\n0 2 1\n1 2 1\n";
    }
    auto neg = run_cli({"decide", tmp.file("mono.pcg"), "--certificate"});
    CHECK(neg.code == 0);
    CHECK(neg.out.find("remove") != std::string::npos);

    auto nj = run_cli({"decide", tmp.file("mono.pcg"), "--json"});
    CHECK(nj.code == 0);
    auto nparsed = json::parse(nj.out);
    CHECK(nparsed["pc_cycle_exists"] == false);
    CHECK(nparsed["elimination"]["steps"].is_array());
    CHECK(nparsed["cycle"].is_null());

    auto missing = run_cli({"decide", tmp.file("nope.pcg")});
    CHECK(missing.code == 2);
    CHECK_FALSE(missing.err.empty());

    // directed files go through the exhaustive finder
    {
        std::ofstream f(tmp.file("two.pcg"));
        f << "pcg d 2 2\n0 1 1\n1 0 2\n";
    }
    CHECK(run_cli({"decide", tmp.file("two.pcg")}).code == 1);
}

TEST_CASE("check subcommand", "[cli]") {
    TmpDir tmp;
    {
        std::ofstream f(tmp.file("c4.pcg"));
        f << "pcg u 4 2\n0 1 1\n0 3 2\n1 2 2\n2 3 1\n";
    }
    auto ok = run_cli({"check", tmp.file("c4.pcg")});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("n=4") != std::string::npos);

    CHECK(run_cli({"check", tmp.file("c4.pcg"), "--cycle", "0,1,2,3"}).code == 0);
    CHECK(run_cli({"check", tmp.file("c4.pcg"), "--cycle", "0,1,2"}).code == 1);

    {
        std::ofstream f(tmp.file("bad.pcg"));
        f << "pcg u 2 2\n0 0 1\n";
    }
    auto bad = run_cli({"check", tmp.file("bad.pcg")});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 2") != std::string::npos);
}

TEST_CASE("transform subcommands", "[cli]") {
    TmpDir tmp;
    {
        std::ofstream f(tmp.file("e.pcg"));
        f << "pcg u 2 2\n0 1 1\n";
    }
    auto dres = run_cli({"transform", "double", tmp.file("e.pcg")});
    CHECK(dres.code == 0);
    CHECK(dres.out == "pcg d 2 2\n0 1 1\n1 0 1\n");

    {
        std::ofstream f(tmp.file("d4.pcg"));
        f << "pcg d 2 4\n0 1 1\n1 0 3\n";
    }
    auto mres = run_cli({"transform", "merge", tmp.file("d4.pcg"), "-o", tmp.file("m.pcg")});
    CHECK(mres.code == 0);
    std::ifstream back(tmp.file("m.pcg"));
    std::stringstream ss;
    ss << back.rdbuf();
    CHECK(ss.str() == "pcg d 2 2\n0 1 1\n1 0 2\n");

    // wrong mode is an error
    CHECK(run_cli({"transform", "double", tmp.file("d4.pcg")}).code == 2);
    CHECK(run_cli({"transform", "merge", tmp.file("e.pcg")}).code == 2);
}

TEST_CASE("bounds subcommand", "[cli]") {
    auto r = run_cli({"bounds", "--n", "1024", "--c", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("lower_bound_d 3.33903") != std::string::npos);

    auto j = run_cli({"bounds", "--n", "16", "--c", "4", "--json"});
    REQUIRE(j.code == 0);
    auto parsed = json::parse(j.out);
    CHECK(parsed["lower_bound_d"].is_number());
    CHECK(parsed["gsy_lower"].is_number());
    CHECK(parsed["gsy_upper"].is_number());
    CHECK_THAT(parsed["merged_upper"].get<double>(),
               Catch::Matchers::WithinAbs(5.0 / 3.0, 1e-9));

    CHECK(run_cli({"bounds", "--n", "2", "--c", "2"}).code == 2);
}

TEST_CASE("search subcommand", "[cli]") {
    TmpDir tmp;
    auto r = run_cli({"search", "--n", "3", "--c", "2", "-o", tmp.file("w.pcg"), "--json"});
    REQUIRE(r.code == 0);
    auto parsed = json::parse(r.out);
    CHECK(parsed["max_delta"] == 0);
    CHECK(parsed["d_exact"] == 1);
    CHECK(parsed["examined"] == 27);
    CHECK(parsed["mode"] == "undirected");
    CHECK(parsed.contains("witness"));
    CHECK(fs::exists(tmp.file("w.pcg")));

    auto guard = run_cli({"search", "--n", "6", "--c", "3"});
    CHECK(guard.code == 2);
    CHECK(guard.err.find("feasibility guard") != std::string::npos);

    auto huge = run_cli({"search", "--n", "9", "--c", "3", "--force"});
    CHECK(huge.code == 2);  // exceeds 2^64 states outright
}

TEST_CASE("conjecture subcommand", "[cli]") {
    TmpDir tmp;
    REQUIRE(run_cli({"gen", "--params", "1,1,1", "-o", tmp.file("g.pcg")}).code == 0);
    auto r = run_cli({"conjecture", tmp.file("g.pcg")});
    CHECK(r.code == 0);
    CHECK(r.out.find("claimed_length 4") != std::string::npos);
    CHECK(r.out.find("verdict violated") != std::string::npos);

    auto j = run_cli({"conjecture", tmp.file("g.pcg"), "--json"});
    auto parsed = json::parse(j.out);
    CHECK(parsed["verdict"] == "violated");
    CHECK(parsed["delta_mon"] == 1);
    CHECK(parsed["longest_length"].is_null());
}

TEST_CASE("verify subcommand", "[cli]") {
    TmpDir tmp;
    auto r = run_cli({"verify", "--max-sum", "2", "--colors", "2", "--bases", "1", "--samples",
                      "20", "--seed", "7", "--dump-dir", tmp.path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("RESULT pass") != std::string::npos);

    auto j = run_cli({"verify", "--max-sum", "1", "--colors", "2", "--samples", "5", "--seed", "7",
                      "--dump-dir", tmp.path.string(), "--json"});
    REQUIRE(j.code == 0);
    auto parsed = json::parse(j.out);
    CHECK(parsed["ok"] == true);
    CHECK(parsed["checks"].is_array());
    CHECK_FALSE(parsed["checks"].empty());
}

TEST_CASE("export-dot subcommand", "[cli]") {
    TmpDir tmp;
    {
        std::ofstream f(tmp.file("e.pcg"));
        f << "pcg u 2 2\n0 1 1\n";
    }
    auto r = run_cli({"export-dot", tmp.file("e.pcg")});
    CHECK(r.code == 0);
    CHECK(r.out.find("graph pcg {") != std::string::npos);
    CHECK(r.out.find("0 -- 1 [label=\"1\"") != std::string::npos);

    {
        std::ofstream f(tmp.file("d.pcg"));
        f << "pcg d 2 2\n0 1 1\n1 0 2\n";
    }
    auto d = run_cli({"export-dot", tmp.file("d.pcg")});
    CHECK(d.out.find("digraph pcg {") != std::string::npos);
    CHECK(d.out.find("0 -> 1") != std::string::npos);
    CHECK(d.out.find("1 -> 0") != std::string::npos);

    SECTION("construction export carries one styled edge per color class") {
        REQUIRE(run_cli({"gen", "--params", "1,1", "-o", tmp.file("g11.pcg")}).code == 0);
        auto g = run_cli({"export-dot", tmp.file("g11.pcg")});
        REQUIRE(g.code == 0);
        std::size_t edges = 0;
        for (std::size_t pos = g.out.find(" -- "); pos != std::string::npos;
             pos = g.out.find(" -- ", pos + 1))
            ++edges;
        CHECK(edges == 6);
        CHECK(g.out.find("red") != std::string::npos);
        CHECK(g.out.find("blue") != std::string::npos);
    }
}

TEST_CASE("bad usage exits 2", "[cli]") {
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"gen"}).code == 2);                      // missing --params
    CHECK(run_cli({"gen", "--params", "1,1", "--base", "0"}).code == 2);
}
