#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "liext/catalog.hpp"
#include "liext/extending.hpp"
#include "liext/io.hpp"

using namespace liext;

namespace {

std::string g_binary;
std::string g_fixtures;

struct RunResult {
    int code = -1;
    std::string output;  // stdout and stderr interleaved
};

/// Runs the tool with the given arguments and captures everything it prints.
RunResult run_cli(const std::string& args) {
    const std::string cmd = g_binary + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
    const int status = pclose(pipe);
    REQUIRE(status != -1);
    result.code = WEXITSTATUS(status);
    return result;
}

std::string fx(const std::string& name) { return g_fixtures + "/" + name; }

} // namespace

TEST_CASE("exit codes follow the pass, fail, usage contract") {
    struct Row {
        std::string args;
        int code;
    };
    const std::vector<Row> rows = {
        // passing verdicts
        {"check sl2", 0},
        {"check " + fx("perfect5.alg"), 0},
        {"der perfect5", 0},
        {"twder gl2 --scan 0,1,-1,2,3", 0},
        {"codim1 gl2 --lambda 1,0,0,1 --D " + fx("trace_dir.mat"), 0},
        {"product --kind unified " + fx("datum_heis.dat"), 0},
        {"product --kind twisted " + fx("datum_heis.dat"), 0},
        {"product --kind crossed " + fx("datum_heis.dat"), 0},
        {"product --kind bicrossed " + fx("datum_bicrossed.dat"), 0},
        {"extract heisenberg3 --gdim 1", 0},
        {"equiv-twder sl2 " + fx("pair_inner.twd") + " " + fx("pair_zero.twd"), 0},
        {"classify-codim1 sl2", 0},
        {"enumerate --p 2 --g abelian:1 --dimv 1 --relation equiv", 0},
        {"catalog heisenberg3", 0},
        // failed mathematical verdicts
        {"check " + fx("not_lie.alg"), 1},
        {"product --kind unified " + fx("datum_invalid.dat"), 1},
        {"equiv-twder gl2 " + fx("pair_gl2_trace.twd") + " " + fx("pair_gl2_zero.twd"), 1},
        {"equiv-twder sl2 " + fx("pair_bad.twd") + " " + fx("pair_zero.twd"), 1},
        // a nonzero functional on a perfect algebra cannot twist anything
        {"codim1 sl2 --lambda 1,0,0 --D " + fx("zero3.mat"), 1},
        // the leading block of heisenberg3 of size 2 is not closed
        {"extract heisenberg3 --gdim 2", 1},
        // usage and parse errors
        {"check " + fx("bad_syntax.alg"), 2},
        {"check no_such_algebra", 2},
        {"bogus-verb", 2},
        {"product --kind sideways " + fx("datum_heis.dat"), 2},
        {"product --kind bicrossed " + fx("datum_heis.dat"), 2},
        {"codim1 gl2 --lambda 1,0 --D " + fx("trace_dir.mat"), 2},
        {"enumerate --p 4 --g abelian:1 --dimv 1", 2},
        {"enumerate --p 3 --g no_such --dimv 1", 2},
        {"extract heisenberg3 --gdim 3", 2},
        {"codim1 sl2 --lambda 1,0,0 --D " + fx("trace_dir.mat"), 2},
        {"twder gl2 --lambda 1,0,0,1 --scan 0,1", 2},
        {"catalog unheard_of", 2},
    };
    for (const Row& row : rows) {
        CAPTURE(row.args);
        CHECK(run_cli(row.args).code == row.code);
    }
}

TEST_CASE("repeated runs are byte-identical") {
    const std::vector<std::string> commands = {
        "check perfect5",
        "check " + fx("not_lie.alg"),
        "der perfect5",
        "der gl2",
        "twder gl2",
        "twder gl2 --lambda 1,0,0,1",
        "twder gl2 --scan 0,1,-1,2,3,5",
        "codim1 gl2 --lambda 1,0,0,1 --D " + fx("trace_dir.mat"),
        "product --kind unified " + fx("datum_heis.dat"),
        "product --kind crossed " + fx("datum_heis.dat"),
        "product --kind bicrossed " + fx("datum_bicrossed.dat"),
        "extract heisenberg3 --gdim 1",
        "extract sl2 --gdim 2",
        "equiv-twder sl2 " + fx("pair_inner.twd") + " " + fx("pair_zero.twd"),
        "equiv-twder gl2 " + fx("pair_gl2_trace.twd") + " " + fx("pair_gl2_zero.twd"),
        "--field F3 classify-codim1 abelian:2",
        "classify-codim1 gl2",
        "enumerate --p 2 --g abelian:1 --dimv 1",
        "enumerate --p 3 --g abelian:1 --dimv 1 --relation cohom",
        "catalog perfect5",
        "--format machine check sl2",
        "--format machine der perfect5",
        "--format machine twder gl2 --scan 0,1,2",
        "--format machine enumerate --p 2 --g abelian:2 --dimv 1 --relation equiv",
        "--format machine --field F3 classify-codim1 abelian:1",
        "--format machine equiv-twder sl2 " + fx("pair_inner.twd") + " " + fx("pair_zero.twd"),
    };
    for (const std::string& cmd : commands) {
        CAPTURE(cmd);
        const RunResult first = run_cli(cmd);
        const RunResult second = run_cli(cmd);
        CHECK(first.code == second.code);
        CHECK(first.output == second.output);
        CHECK(!first.output.empty());
    }
}

TEST_CASE("enumerate output does not depend on the worker count") {
    const std::string base = "enumerate --p 3 --g abelian:2 --dimv 1";
    const RunResult serial = run_cli(base);
    const RunResult threaded = run_cli(base + " --threads 3");
    CHECK(serial.code == 0);
    CHECK(threaded.code == 0);
    CHECK(serial.output == threaded.output);
}

TEST_CASE("printed algebras and data parse back") {
    const RunResult cat = run_cli("catalog sl2");
    REQUIRE(cat.code == 0);
    CHECK(parse_algebra(cat.output) == catalog("sl2", FieldSpec::rationals()));
    CHECK(serialize_algebra(parse_algebra(cat.output)) == cat.output);

    const RunResult ext = run_cli("codim1 gl2 --lambda 1,0,0,1 --D " + fx("trace_dir.mat"));
    REQUIRE(ext.code == 0);
    const LieAlgebra product = parse_algebra(ext.output);
    CHECK(product.dim() == 5);
    CHECK(check_lie(product).passed());

    const RunResult datum = run_cli("extract gl2 --gdim 2");
    REQUIRE(datum.code == 0);
    const ExtendingDatum d = parse_datum(datum.output);
    CHECK(d.dim_g() == 2);
    CHECK(d.dimv() == 2);
    CHECK(check_extending_structure(d).passed());
}

TEST_CASE("key output lines match the frozen formats") {
    const RunResult census = run_cli("--format machine enumerate --p 2 --g abelian:1 --dimv 1 --relation equiv");
    CHECK(census.output == "raw=16\nvalid=4\ncross=0\norbits_equiv=3\n");

    const RunResult check = run_cli("check sl2");
    CHECK(check.output ==
          "algebra sl2: dim 3 over Q\nalternating pass\njacobi pass\ncheck pass\n");

    const RunResult scan = run_cli("twder gl2 --scan 2");
    CHECK(scan.output.find("q = 2: dim D = 4\n") != std::string::npos);

    const RunResult equiv =
        run_cli("equiv-twder sl2 " + fx("pair_inner.twd") + " " + fx("pair_zero.twd"));
    CHECK(equiv.output == "equivalent q = 1 g0 = 1 0 0\n");
}

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: test_cli <liext-binary> <fixtures-dir> [doctest args]\n";
        return 1;
    }
    g_binary = argv[1];
    g_fixtures = argv[2];
    doctest::Context context;
    context.applyCommandLine(argc - 2, argv + 2);
    return context.run();
}
