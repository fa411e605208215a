#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "starres/cli.hpp"
#include "starres/io.hpp"
#include "starres/resolution.hpp"

using namespace starres;

namespace {

struct Result {
    int code;
    std::string out;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "starres");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str()};
}

}  // namespace

TEST_CASE("iseries command") {
    const Result r = invoke({"iseries", "17", "10"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["expansion"] == Json::parse("[2,4,2,2]"));
    CHECK(j["series"] == Json::parse("[17,10,3,2,1,0]"));
    CHECK(j["set"] == Json::parse("[0,1,2,3,10,17]"));
}

TEST_CASE("graph command in JSON and DOT") {
    const Result r = invoke({"graph", "--p", "3,5,5", "--x", "2,2,3", "--c", "0"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["minimal"] == true);
    CHECK(j["specials"].size() == 7u);
    const DualGraph g = dual_graph_from_json(j["graph"]);
    CHECK(g.labels[0] == -3);
    CHECK(to_json(g).dump() == j["graph"].dump());

    const Result d = invoke({"graph", "--p", "3,5,5", "--x", "2,2,3", "--c", "0", "--format", "dot"});
    CHECK(d.code == 0);
    CHECK(d.out.find("center [label=\"-3\"") != std::string::npos);
}

TEST_CASE("inline JSON input matches flags") {
    const Result a = invoke({"quiver", "--p", "3,5,5", "--x", "2,2,3", "--c", "0"});
    const Result b = invoke({"quiver", "--json",
                             R"({"params":{"p":[3,5,5],"lambda":[[1,0],[0,1],[1,1]]},"x":{"xi":[2,2,3],"c":0}})"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(Json::parse(a.out)["combinatorial_agrees"] == true);
}

TEST_CASE("lambda flag") {
    const Result r = invoke({"graph", "--p", "2,3,4", "--lambda", "1:0,0:1,1/2:3", "--x", "1,1,1", "--c", "0"});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["graph"]["params"]["lambda"][2] == Json::parse(R"(["1/2",3])"));
    CHECK(invoke({"graph", "--p", "2,3,4", "--lambda", "1:0,1:0", "--x", "1,1,1"}).code == 1);
}

TEST_CASE("domestic command") {
    const Result r = invoke({"domestic", "--p", "2,3,4", "--m", "3"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out) == Json::parse(R"({"group":"O_13","h":12,"pi_index":13})"));
}

TEST_CASE("specials and wahl commands") {
    const Result s = invoke({"specials", "--p", "3,5,5", "--x", "2,2,3", "--c", "0"});
    CHECK(s.code == 0);
    CHECK(Json::parse(s.out).size() == 7u);
    const Result w = invoke({"wahl", "--p", "2,3,3", "--max-degree", "6"});
    CHECK(w.code == 0);
    CHECK(Json::parse(w.out)["verify"]["ok"] == true);
}

TEST_CASE("domain errors exit 1 with a structured message") {
    const Result r = invoke({"specials", "--p", "3,5,5", "--x", "2,0,0", "--c", "0"});
    CHECK(r.code == 1);
    const Json j = Json::parse(r.out);
    CHECK(j["code"] == "not_minimal");
    CHECK(j.contains("message"));
    CHECK(invoke({"iseries", "5", "7"}).code == 1);
    CHECK(invoke({"domestic", "--p", "2,3,7", "--m", "3"}).code == 1);
}

TEST_CASE("parse errors exit 2") {
    CHECK(invoke({"graph", "--p", "3,x"}).code == 2);
    CHECK(invoke({"iseries", "17"}).code == 2);
    CHECK(invoke({"nosuch"}).code == 2);
    CHECK(invoke({"graph", "--json", "{not json"}).code == 2);
    CHECK(invoke({"graph", "--p", "3,5,5", "--format", "svg"}).code == 2);
}

TEST_CASE("output is deterministic") {
    CHECK(invoke({"sweep", "--r-max", "10", "--samples", "3"}).out ==
          invoke({"sweep", "--r-max", "10", "--samples", "3"}).out);
}

TEST_CASE("STARRES_SEED overrides --seed") {
    ::setenv("STARRES_SEED", "77", 1);
    const Result r = invoke({"sweep", "--r-max", "8", "--samples", "2", "--seed", "5"});
    ::unsetenv("STARRES_SEED");
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["seed"] == 77);
    const Result plain = invoke({"sweep", "--r-max", "8", "--samples", "2", "--seed", "5"});
    CHECK(Json::parse(plain.out)["seed"] == 5);
    ::setenv("STARRES_SEED", "abc", 1);
    CHECK(invoke({"sweep", "--samples", "1"}).code == 2);
    ::unsetenv("STARRES_SEED");
}

TEST_CASE("run with a config directly") {
    RunConfig config;
    config.command = "iseries";
    config.positional = {"5", "3"};
    std::ostringstream out;
    CHECK(run(config, out) == 0);
    CHECK(Json::parse(out.str())["set"] == Json::parse("[0,1,3,5]"));
}
