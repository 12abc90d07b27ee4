#include "ptorus/cli.hpp"

#include "ptorus/fan.hpp"
#include "ptorus/render.hpp"
#include "test_util.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ptorus;
using namespace ptorus::testutil;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string scratch_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("ptorus_cli_" + name)).string();
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = scratch_path(name);
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("shear subcommand prints the figure value") {
    RunResult r = run({"shear", "--curve", "ccw:2/3"});
    CHECK(r.code == 0);
    CHECK(r.out == "-2,3,0\n");

    RunResult rt = run({"shear", "--curve", "ccw:1/1", "--flips", "3"});
    CHECK(rt.code == 0);
    CHECK(rt.out == "0,0,1\n");
}

TEST_CASE("mutate subcommand applies the sequence to a row") {
    RunResult r = run({"mutate", "--seq", "1,2", "--row", "1,-1,0"});
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 7) == "1,-1,0\n");

    RunResult j = run({"--json", "mutate", "--seq", "1", "--row", "1,0,0"});
    CHECK(j.code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["row"] == nlohmann::json::array({"-1", "2", "0"}));
    CHECK(parsed["matrix"][0][1] == "-2");
}

TEST_CASE("locate and expand subcommands") {
    RunResult r = run({"--json", "locate", "--vector", "-2/5,13/10,1/10"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["cone"] == "TriangleImage");
    CHECK(j["family"] == 1);

    RunResult e = run({"--json", "expand", "--vector", "1,1,1"});
    auto je = nlohmann::json::parse(e.out);
    CHECK(je["cone"] == "PositiveOrthant");
    CHECK(je["coefficients"] == nlohmann::json::array({"1", "1", "1"}));

    // vectors in JSON output re-parse to the same exact values
    std::mt19937_64 rng(97);
    for (int i = 0; i < 1000; ++i) {
        Vec3 v = random_rat_vec(rng);
        CHECK(parse_vec3(format_vec3(v)) == v);
    }
}

TEST_CASE("verify subcommand reports coherence and witnesses") {
    std::string good = write_temp("rel_good.txt",
                                  "# orthant expansion residual\n"
                                  "1,1,1 1\n1,0,0 -1\n0,1,0 -1\n0,0,1 -1\n");
    RunResult r = run({"verify", "--relation", good, "--depth", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("coherent") == 0);

    std::string bad = write_temp("rel_bad.txt", "1,-1,0=1\n-1,1,0=1\n");
    RunResult rb = run({"--json", "verify", "--relation", bad, "--depth", "3"});
    CHECK(rb.code == 1);
    auto j = nlohmann::json::parse(rb.out);
    CHECK(j["coherent"] == false);
    CHECK(j["witness"].size() == 0);

    RunResult missing = run({"verify", "--relation", "no_such_file.txt"});
    CHECK(missing.code == 2);
}

TEST_CASE("tangle subcommand finds witnesses") {
    std::string spec = write_temp("tangle.txt", "cl:1/0=1\ncl:0/1=1\ncl:1/-1=1\n");
    RunResult r = run({"--json", "tangle", "--spec", spec, "--max-depth", "4"});
    CHECK(r.code == 1);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["witness_found"] == true);
    CHECK(j["depth"] == 1);

    std::string zero = write_temp("tangle_zero.txt", "cl:1/0=0\n");
    RunResult rz = run({"tangle", "--spec", zero, "--max-depth", "3"});
    CHECK(rz.code == 0);
    CHECK(rz.out.find("exhausted") == 0);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({"shear"}).code == 2);
    CHECK(run({"shear", "--curve", "bogus"}).code == 2);
    CHECK(run({"locate", "--vector", "1,2"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"render", "--max-height", "0"}).code == 2);
}

TEST_CASE("render produces deterministic SVG with the census cell counts") {
    RunResult r1 = run({"render", "--max-height", "2", "--out", scratch_path("fan_a.svg")});
    RunResult r2 = run({"render", "--max-height", "2", "--out", scratch_path("fan_b.svg")});
    CHECK(r1.code == 0);
    CHECK(r2.code == 0);
    std::ifstream fa(scratch_path("fan_a.svg")), fb(scratch_path("fan_b.svg"));
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(!sa.str().empty());

    FanCensus census = census_by_depth(2);
    std::string svg = sa.str();
    auto count = [&svg](const std::string& needle) {
        long n = 0;
        for (size_t pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1))
            ++n;
        return n;
    };
    CHECK(count("class=\"cell3\"") == census.cones3);
    CHECK(count("class=\"cell2\"") == census.cones2);
    CHECK(count("class=\"ray\"") == census.rays_spiral + census.rays_plane);
    CHECK(count("class=\"axis-label\"") == 3);
}

TEST_CASE("smallest rendering shows both orthants and their six neighbors") {
    RunResult r = run({"--json", "render", "--max-height", "1", "--out", scratch_path("fan_min.svg")});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["cells3"] == 8);  // the orthant pair and the six adjacent spiral cones
    CHECK(j["labels"] == 3);
}

TEST_CASE("sanity subcommand") {
    RunResult r = run({"--json", "sanity", "--samples", "50", "--max-height", "3"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["ok"] == true);
    CHECK(j["samples"] == 50);
}

}  // TEST_SUITE
