#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ldlab/cli.hpp"
#include "ldlab/core/json_io.hpp"

using ldlab::Json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
    Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = ldlab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const fs::path p = fs::temp_directory_path() / ("ldlab_cli_" + name);
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
}

}  // namespace

TEST_CASE("sha256") {
    CHECK(ldlab::cli::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(ldlab::cli::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("verify refutes the full binary square") {
    const std::string text = R"({"q": 2, "n": 2, "words": [[0,0],[0,1],[1,0],[1,1]]})";
    const auto path = write_temp("square.json", text);
    auto r = run({"verify", "--code", path, "--t", "1", "--L", "2"});
    CHECK(r.code == 1);
    auto j = r.json();
    CHECK(j["result"]["witness_indices"] == Json({0, 1, 2}));
    CHECK(j["result"]["center"] == Json({0, 0}));
    CHECK(j["result"]["certificate_rechecked"] == true);
    CHECK(j["manifest"]["subcommand"] == "verify");
    CHECK(j["manifest"]["tool_version"] == "0.1.0");
    CHECK(j["manifest"]["seed"].is_null());
    CHECK(j["manifest"]["params"]["t"] == 1);
    CHECK(j["manifest"]["params"]["threads"] == 1);
    CHECK(j["manifest"]["inputs"][0]["sha256"] == ldlab::cli::sha256_hex(text));
    CHECK_FALSE(j["manifest"].contains("wall_time_ms"));

    auto pass = run({"verify", "--code", path, "--t", "1", "--L", "3"});
    CHECK(pass.code == 0);
    CHECK(pass.json()["result"]["verdict"] == "pass");
}

TEST_CASE("verify accepts linear codes and list recovery") {
    const auto path = write_temp("parity.json", R"({"q": 2, "n": 3, "k": 2, "generator": [[1,0,1],[0,1,1]]})");
    CHECK(run({"verify", "--code", path, "--t", "1", "--L", "3"}).code == 0);
    CHECK(run({"verify", "--code", path, "--t", "1", "--L", "1"}).code == 1);
    const auto rep = write_temp("rep.json", R"({"q": 3, "n": 2, "words": [[0,0],[1,1],[2,2]]})");
    CHECK(run({"verify", "--code", rep, "--t", "0", "--L", "2", "--ell", "2"}).code == 0);
    CHECK(run({"verify", "--code", rep, "--t", "1", "--L", "2", "--ell", "2"}).code == 1);
}

TEST_CASE("bounds") {
    auto r = run({"bounds", "--q", "4", "--n", "4", "--t", "2", "--L", "2", "--bound", "ld_singleton"});
    CHECK(r.code == 0);
    CHECK(r.json()["result"]["value"] == 8);
    auto all = run({"bounds", "--q", "4", "--n", "4", "--t", "2", "--L", "2"});
    CHECK(all.code == 0);
    CHECK(all.json()["result"]["ld_singleton"]["value"] == 8);
    CHECK(all.json()["result"].contains("ld_refined"));
    CHECK(run({"bounds", "--q", "4", "--n", "4", "--t", "2", "--L", "2", "--bound", "nope"}).code == 2);
}

TEST_CASE("attacks") {
    const auto lin = write_temp("lin.json", R"({"q": 3, "n": 3, "k": 2, "generator": [[1,0,1],[0,1,1]]})");
    auto r = run({"attack", "--kind", "linear", "--code", lin, "--t", "1", "--L", "2"});
    CHECK(r.code == 1);
    CHECK(r.json()["result"]["verified"] == true);
    const auto box = write_temp("box.json", R"({"q": 5, "n": 4, "words": [[0,0,0,0],[1,1,1,1],[2,2,2,2],[3,3,3,3]]})");
    auto b = run({"attack", "--kind", "box", "--code", box, "--t", "1", "--ell", "3"});
    CHECK(b.code == 1);
    CHECK(b.json()["result"]["verified"] == true);
    auto s = run({"attack", "--kind", "subcode", "--code", box, "--t", "1", "--L", "1"});
    CHECK(s.code == 0);
    CHECK(s.json()["result"].contains("subcode"));
}

TEST_CASE("malformed input reports location") {
    const auto bad = write_temp("bad.json", "{\"q\": 2, \"n\": 2, \"words\": [[0,0],[0,");
    auto r = run({"verify", "--code", bad, "--t", "1", "--L", "2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("byte") != std::string::npos);
    const auto wrong = write_temp("wrong.json", R"({"q": 2, "n": 2, "words": [[0,0],[0,7]]})");
    auto w = run({"verify", "--code", wrong, "--t", "1", "--L", "2"});
    CHECK(w.code == 2);
    CHECK(w.err.find("words[1][1]") != std::string::npos);
    CHECK(run({"verify", "--t", "1"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"verify", "--code", "/nonexistent/x.json", "--t", "1", "--L", "1"}).code == 2);
}

TEST_CASE("reports are deterministic") {
    std::vector<std::string> args{"hg", "pipeline", "--n", "4", "--q", "4", "--t", "1", "--L", "2", "--seed", "7"};
    auto a = run(args);
    auto b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.json()["manifest"]["seed"] == 7);
    CHECK(a.json()["manifest"]["subcommand"] == "hg pipeline");
    args.push_back("--timing");
    CHECK(run(args).json()["manifest"].contains("wall_time_ms"));
}

TEST_CASE("hypergraph round trip and certification") {
    auto built = run({"hg", "build", "--n", "3", "--q", "4", "--v", "5", "--e", "2", "--seed", "3"});
    CHECK(built.code == 0);
    const auto graph = write_temp("graph.json", built.json()["result"]["graph"].dump());
    auto cert = run({"hg", "certify", "--graph", graph, "--v", "5", "--e", "2"});
    CHECK(cert.code == 0);
    CHECK(cert.json()["result"]["sparse"] == true);
    auto conv = run({"hg", "convert", "--input", graph, "--t", "1", "--L", "1"});
    CHECK(conv.code == 0);
    CHECK(conv.json()["result"]["guaranteed"] == true);
    const auto dense = write_temp("dense.json", R"({"q": 2, "n": 2, "edges": [[0,0],[0,1]]})");
    CHECK(run({"hg", "certify", "--graph", dense, "--v", "3", "--e", "2"}).code == 1);
}

TEST_CASE("search, separate and rs-search") {
    auto s = run({"search", "--q", "2", "--n", "2", "--t", "1", "--L", "3"});
    CHECK(s.code == 0);
    CHECK(s.json()["result"]["size"] == 4);
    CHECK(run({"search", "--q", "3", "--n", "4", "--t", "1", "--L", "2", "--budget", "10"}).code == 3);
    auto lin = run({"search", "--q", "3", "--n", "3", "--t", "1", "--L", "2", "--linear"});
    CHECK(lin.json()["result"]["k"] == 1);
    auto sep = run({"separate", "--n", "3", "--t", "1", "--L", "2", "--q", "3"});
    CHECK(sep.code == 0);
    CHECK(sep.json()["result"]["reports"][0]["max_linear"] == 3);
    CHECK(sep.json()["manifest"]["params"]["q"] == 3);
    CHECK(run({"rs-search", "--q", "7", "--n", "6", "--k", "4", "--t", "2", "--L", "1"}).code == 1);
    CHECK(run({"rs-search", "--q", "7", "--n", "6", "--k", "4", "--t", "1", "--L", "1", "--budget", "0"}).code == 3);
}

TEST_CASE("executable writes --out and returns the exit code") {
    const auto out = (fs::temp_directory_path() / "ldlab_cli_out.json").string();
    fs::remove(out);
    const std::string cmd = std::string(LDLAB_TOOL) + " bounds --q 4 --n 4 --t 2 --L 2 --out " + out;
    CHECK(std::system(cmd.c_str()) == 0);
    std::ifstream in(out);
    CHECK(Json::parse(in)["result"]["ld_singleton"]["value"] == 8);
}

TEST_CASE("golden reports") {
    const fs::path root(LDLAB_SOURCE_DIR);
    const fs::path previous = fs::current_path();
    fs::current_path(root);
    const bool update = std::getenv("LDLAB_UPDATE_GOLDEN") != nullptr;
    std::ifstream corpus(root / "tests/golden/corpus.txt");
    std::string line;
    std::size_t checked = 0;
    while (std::getline(corpus, line)) {
        std::istringstream words(line);
        std::string name, arg;
        words >> name;
        std::vector<std::string> args;
        while (words >> arg) args.push_back(arg);
        const auto r = run(args);
        const fs::path golden = root / "tests/golden" / (name + ".json");
        CAPTURE(name);
        if (update) std::ofstream(golden, std::ios::binary) << r.out;
        std::ifstream in(golden, std::ios::binary);
        std::stringstream expected;
        expected << in.rdbuf();
        CHECK(r.out == expected.str());
        ++checked;
    }
    fs::current_path(previous);
    CHECK(checked == 6);
}
