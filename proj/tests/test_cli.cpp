#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "monopath/cli.hpp"

using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = monopath::runCli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("partition then verify round trip") {
        auto built = run({"partition", "--mode", "rado", "--coloring", "constant:0", "--r", "2",
                          "--prefix", "20"});
        CHECK(built.code == 0);
        json j = json::parse(built.out);
        CHECK(j["partition"]["pieces"].size() == 2);
        CHECK(j["verification"]["valid"] == true);

        // feed the partition back through verify
        std::string tmp = "/tmp/monopath_cli_roundtrip.json";
        {
            std::ofstream f(tmp);
            f << j["partition"].dump();
        }
        auto verified = run({"verify", "--coloring", "constant:0", "--r", "2", "--input", tmp});
        CHECK(verified.code == 0);

        // tamper with one vertex
        json bad = j["partition"];
        bad["pieces"][0]["vertices"][3] = 999;
        {
            std::ofstream f(tmp);
            f << bad.dump();
        }
        auto rejected = run({"verify", "--coloring", "constant:0", "--r", "2", "--input", tmp});
        CHECK(rejected.code == 1);
    }

    TEST_CASE("tight partitions round trip through verify") {
        auto built = run({"partition", "--mode", "tight", "--coloring", "seeded-random:2,3,11",
                          "--prefix", "20", "--horizon", "4000"});
        CHECK(built.code == 0);
        json j = json::parse(built.out);
        std::string tmp = "/tmp/monopath_cli_tight.json";
        {
            std::ofstream f(tmp);
            f << j["partition"].dump();
        }
        auto verified =
            run({"verify", "--coloring", "seeded-random:2,3,11", "--input", tmp});
        CHECK(verified.code == 0);
    }

    TEST_CASE("classifier classes work as ladder names") {
        auto res = run({"game", "play", "--host", "seeded-random:2,2,3:0", "--k", "1", "--ladder",
                        "class:0,all", "--adam", "empty", "--rounds", "20", "--prefix", "2",
                        "--horizon", "4000"});
        CHECK(res.code == 0);
    }

    TEST_CASE("identical configuration gives byte-identical output") {
        std::vector<std::string> args{"partition", "--mode", "squares", "--coloring",
                                      "seeded-random:2,2,12", "--prefix", "40"};
        auto a = run(args);
        auto b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }

    TEST_CASE("classification output") {
        auto res = run({"classify", "--coloring", "counterexample", "--prefix", "12", "--horizon",
                        "2000"});
        CHECK(res.code == 0);
        json j = json::parse(res.out);
        CHECK(j["specialColor"] == 0);
        CHECK(j["provenance"] == "exact");
        CHECK(j["dMap"]["0"] == 1);
        CHECK(j["dMap"]["9"] == 0);
    }

    TEST_CASE("counterexample report") {
        auto res = run({"counterexample", "--report", "json"});
        CHECK(res.code == 0);
        json j = json::parse(res.out);
        CHECK(j["twoSquareCover"] == false);
        CHECK(j["ok"] == true);
    }

    TEST_CASE("game play with audit") {
        auto res = run({"game", "play", "--host", "constant:0:0", "--k", "2", "--ladder",
                        "all,all,all", "--adam", "random:5", "--rounds", "30", "--prefix", "5"});
        CHECK(res.code == 0);
        json j = json::parse(res.out);
        CHECK(j["audit"]["won"] == true);
    }

    TEST_CASE("ladder names for the counterexample blocks") {
        auto res = run({"game", "play", "--host", "counterexample:0", "--k", "2", "--ladder",
                        "A,A,A", "--adam", "empty", "--rounds", "24", "--prefix", "0"});
        CHECK(res.code == 0);
    }

    TEST_CASE("oracle exhaustion exits with the dedicated code") {
        auto res = run({"partition", "--mode", "rado", "--coloring", "seeded-random:2,2,8",
                        "--prefix", "30", "--horizon", "1"});
        CHECK(res.code == 2);
        json j = json::parse(res.out);
        CHECK(j["error"] == "exhausted");
    }

    TEST_CASE("usage errors exit 3") {
        CHECK(run({"partition", "--coloring", "constant:0"}).code == 3);  // missing prefix
        CHECK(run({"partition", "--mode", "nope", "--coloring", "constant:0", "--prefix", "5"}).code == 3);
        CHECK(run({"nonsense"}).code == 3);
        CHECK(run({"partition", "--mode", "rado", "--coloring", "martian:1", "--prefix", "5"}).code == 3);
    }

    TEST_CASE("coloring dump formats") {
        auto text = run({"coloring", "dump", "--coloring", "block-bipartite", "--n", "4"});
        CHECK(text.code == 0);
        CHECK(text.out.substr(0, 5) == "2 2 4");
        auto js = run({"coloring", "dump", "--coloring", "block-bipartite", "--n", "4", "--format",
                       "json"});
        CHECK(js.code == 0);
        json j = json::parse(js.out);
        CHECK(j["edges"].size() == 6);
    }

    TEST_CASE("sweep subcommand") {
        auto res = run({"sweep", "pokrovskiy", "--n", "5", "--k", "2"});
        CHECK(res.code == 0);
        json j = json::parse(res.out);
        CHECK(j["instances"] == 1024);
        CHECK(j["alarms"] == 0);
    }

    TEST_CASE("file-backed colorings flow through the cli") {
        auto dump = run({"coloring", "dump", "--coloring", "constant:0", "--r", "2", "--n", "12"});
        std::string tmp = "/tmp/monopath_cli_coloring.txt";
        {
            std::ofstream f(tmp);
            f << dump.out;
        }
        auto res = run({"partition", "--mode", "rado", "--coloring", "file:" + tmp, "--prefix",
                        "10", "--horizon", "11"});
        CHECK(res.code == 0);
    }
}
