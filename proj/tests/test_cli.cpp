#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "quasiq/cli.hpp"
#include "quasiq/io.hpp"

using namespace quasiq;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli_dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("quasiq_test_" + name) {
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("product subcommand reproduces the anchor product") {
    auto r = run({"product", "mul", "--preset", "paper-5.3", "X", "X"});
    CHECK(r.code == 0);
    CHECK(r.out == "(1+i)*YX\n");
    auto r2 = run({"product", "mul", "--preset", "paper-5.3", "YX", "X"});
    CHECK(r2.out == "-i*XYX\n");
    auto r3 = run({"product", "mul", "--preset", "paper-5.3", "YX", "YX"});
    CHECK(r3.out == "0\n");
}

TEST_CASE("solve-coboundary reports the nontrivial class") {
    auto r = run({"cocycle", "solve-coboundary", "--preset", "z2-nontrivial"});
    CHECK(r.code == 0);
    CHECK(r.out == "none (nontrivial class)\n");
    auto rj = run({"--json", "cocycle", "solve-coboundary", "--preset", "z2-nontrivial"});
    auto j = io::json::parse(rj.out);
    CHECK(j.at("coboundary") == false);
}

TEST_CASE("exit codes") {
    auto usage = run({"no-such-command"});
    CHECK(usage.code == 2);
    auto bad = run({"group", "validate", "--group", "does_not_exist.json"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("error:") == 0);
    auto ok = run({"group", "validate", "--group", "Z2"});
    CHECK(ok.code == 0);
    auto help = run({"--help"});
    CHECK(help.code == 0);
}

TEST_CASE("group files load and validate") {
    TempFile good("group.json", R"({"names": ["e", "a"], "table": [[0, 1], [1, 0]]})");
    auto r = run({"group", "validate", "--group", good.path});
    CHECK(r.code == 0);
    TempFile bad("badgroup.json", R"({"names": ["e", "a"], "table": [[0, 1], [1, 1]]})");
    auto rb = run({"group", "classes", "--group", bad.path});
    CHECK(rb.code == 1);
    CHECK(rb.err.find("permutation") != std::string::npos);
}

TEST_CASE("classes subcommand lists s3 data") {
    auto r = run({"--json", "group", "classes", "--group", "S3"});
    auto j = io::json::parse(r.out);
    REQUIRE(j.size() == 3);
    CHECK(j[1]["elements"].size() == 3);
    CHECK(j[1]["centralizer"].size() == 2);
}

TEST_CASE("cocycle files round-trip") {
    TempFile coc("cocycle.json", R"({
        "group": "Z2",
        "values": [{"args": ["g", "g", "g"], "value": "-1"}]
    })");
    auto r = run({"cocycle", "validate", "--cocycle", coc.path});
    CHECK(r.code == 0);
    TempFile bad("badcocycle.json", R"({
        "group": "Z2",
        "values": [{"args": ["g", "g", "g"], "value": "i"}]
    })");
    auto rb = run({"cocycle", "validate", "--cocycle", bad.path});
    CHECK(rb.code == 1);
}

TEST_CASE("induce and simples agree with the compiled presets") {
    auto r = run({"--json", "cocycle", "induce", "--preset", "z2-nontrivial", "--class", "g"});
    CHECK(r.code == 0);
    auto j = io::json::parse(r.out);
    REQUIRE(j.at("values").size() == 1);
    CHECK(j["values"][0]["value"]["coeffs"][0] == "-1");
    auto rs = run({"--json", "rep", "simples", "--preset", "z2-nontrivial", "--class", "g"});
    auto js = io::json::parse(rs.out);
    REQUIRE(js.size() == 2);
}

TEST_CASE("bimodule verify and tables") {
    auto r = run({"bimodule", "verify", "--preset", "paper-5.3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("axioms verified") != std::string::npos);
    // Round-trip the tables through a file.
    auto rt = run({"--json", "bimodule", "tables", "--preset", "example-5.4"});
    TempFile tables("tables.json", rt.out);
    auto rv = run({"bimodule", "verify", "--tables", tables.path});
    CHECK(rv.code == 0);
    auto riso = run({"bimodule", "iso", "example-5.4", tables.path});
    CHECK(riso.code == 0);
    CHECK(riso.out == "isomorphic: true\n");
}

TEST_CASE("bimodule build and extract from a collection preset") {
    auto r = run({"bimodule", "build", "--collection", "Z2:S+i+S-i"});
    CHECK(r.code == 0);
    auto re = run({"--json", "bimodule", "extract", "--preset", "example-5.4"});
    CHECK(re.code == 0);
    auto j = io::json::parse(re.out);
    CHECK(j.at("reps").size() == 1);  // only the arrow class carries a representation
}

TEST_CASE("quiver subcommands") {
    auto r = run({"quiver", "build", "--group", "Z2", "--ramification", "g:2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("X1") != std::string::npos);
    CHECK(r.out.find("Y2") != std::string::npos);
    auto rp = run({"--json", "quiver", "paths", "--group", "Z2", "--ramification", "g:1",
                   "--length", "2"});
    auto j = io::json::parse(rp.out);
    REQUIRE(j.size() == 2);
    CHECK(j[0] == "YX");
    CHECK(j[1] == "XY");
}

TEST_CASE("algebra subcommands") {
    auto r = run({"algebra", "dims", "--preset", "paper-5.3", "--max-degree", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("total  8") != std::string::npos);
    auto rf = run({"algebra", "finiteness", "--preset", "z2-loop", "--max-degree", "4"});
    CHECK(rf.code == 0);
    CHECK(rf.out.find("infinite-dimensional evidence") != std::string::npos);
    auto rg = run({"algebra", "gauge-search", "paper-5.3", "paper-5.5"});
    CHECK(rg.code == 0);
    CHECK(rg.out.find("none") == 0);
    auto rh = run({"algebra", "hopf-detect", "--preset", "paper-5.5"});
    CHECK(rh.out.find("genuinely quasi (nontrivial class)") == 0);
}

TEST_CASE("candidate basis files are checked") {
    TempFile cands("cands.json", R"([
        {"name": "x", "terms": [["X", "1"]]},
        {"name": "x-doubled", "terms": [["X", "2"]]}
    ])");
    auto r = run({"algebra", "basis", "--preset", "paper-5.3", "--max-degree", "4",
                  "--candidates", cands.path});
    CHECK(r.code == 1);
    CHECK(r.out.find("x-doubled") != std::string::npos);
}

TEST_CASE("gauge files drive twist and bimodule gauge") {
    TempFile gauge("gauge.json", R"({
        "group": "Z2",
        "values": [{"args": ["g", "g"], "value": "i"}]
    })");
    auto r = run({"--json", "cocycle", "twist", "--preset", "z2-nontrivial", "--gauge",
                  gauge.path});
    CHECK(r.code == 0);
    auto j = io::json::parse(r.out);
    // On Z2 every coboundary is trivial, so the twist fixes the cocycle.
    REQUIRE(j.at("twisted").at("values").size() == 1);
    CHECK(j["twisted"]["values"][0]["value"]["coeffs"][0] == "-1");
    CHECK(j.at("readings_differ") == true);
    auto rb = run({"bimodule", "gauge", "--preset", "paper-5.3", "--gauge", gauge.path});
    CHECK(rb.code == 0);
    auto rt = run({"bimodule", "trivialize", "--preset", "paper-5.3"});
    CHECK(rt.code == 0);
    CHECK(rt.out.find("identity both ways") != std::string::npos);
}

TEST_CASE("rep sum doubles the arrow representation") {
    auto r = run({"--json", "rep", "sum", "Z2:S+i", "Z2:S-i"});
    CHECK(r.code == 0);
    auto j = io::json::parse(r.out);
    REQUIRE(j.at("reps").size() == 1);
    CHECK(j["reps"][0]["dim"] == 2);
    // and the summed collection round-trips through a file
    TempFile coll("coll.json", r.out);
    auto rv = run({"rep", "validate", "--collection", coll.path});
    CHECK(rv.code == 0);
    auto rb = run({"bimodule", "build", "--collection", coll.path});
    CHECK(rb.code == 0);
}

TEST_CASE("product pow and axiom-check") {
    auto r = run({"product", "pow", "--preset", "paper-5.5", "X", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "0\n");
    auto r3 = run({"product", "pow", "--preset", "paper-5.5", "X", "--n", "3"});
    CHECK(r3.out.find("XYX") != std::string::npos);
    auto ra = run({"product", "axiom-check", "--preset", "example-5.6", "X1", "X2", "Y1"});
    CHECK(ra.code == 0);
    CHECK(ra.out.find("hold") != std::string::npos);
    auto rbad = run({"product", "pow", "--preset", "paper-5.5", "X", "--n", "0"});
    CHECK(rbad.code == 1);
}

TEST_CASE("cyclic cocycle subcommand") {
    auto r = run({"--json", "cocycle", "cyclic", "--n", "4", "--q", "1"});
    CHECK(r.code == 0);
    auto j = io::json::parse(r.out);
    CHECK(j.at("values").size() > 0);
}

TEST_CASE("max degree comes from the environment when not given") {
    setenv("QUASIQ_MAX_DEGREE", "4", 1);
    auto r = run({"--json", "algebra", "dims", "--preset", "paper-5.3"});
    unsetenv("QUASIQ_MAX_DEGREE");
    auto j = io::json::parse(r.out);
    CHECK(j.at("dims").size() == 5);
}

TEST_CASE("deterministic output") {
    auto a = run({"bimodule", "tables", "--preset", "example-5.5"});
    auto b = run({"bimodule", "tables", "--preset", "example-5.5"});
    CHECK(a.out == b.out);
}

TEST_CASE("module errors surface verbatim with exit 1") {
    auto r = run({"bimodule", "iso", "paper-5.3", "z2-hopf"});
    CHECK(r.code == 1);
    CHECK(r.err.find("reassociator mismatch") != std::string::npos);
    auto rs = run({"rep", "simples", "--preset", "trivial:S3", "--class", "e"});
    CHECK(rs.code == 1);
    CHECK(rs.err.find("cyclic") != std::string::npos);
    auto rp = run({"product", "mul", "--preset", "paper-5.3", "XX", "X"});
    CHECK(rp.code == 1);
    CHECK(rp.err.find("not composable") != std::string::npos);
}
