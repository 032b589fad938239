#include "f5lab/cli.hpp"
#include "f5lab/construct.hpp"
#include "f5lab/io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace f5lab;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "f5lab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("f5lab_cli_" + name);
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("lemma report") {
    auto r = run({"lemma", "--name", "gamma-inverse", "--d", "5"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["lemma"] == "gamma-inverse");
    CHECK(j["parameter"] == 5);
    CHECK(j["pass"] == true);
    CHECK(run({"lemma", "--name", "pentagon"}).code == 0);
    CHECK(run({"lemma", "--name", "aes-parameters", "--params", "1-4/15*sqrt5,4/15*sqrt5,4/45,3-4/3*sqrt5"}).code == 0);
    CHECK(run({"lemma", "--name", "aes-parameters", "--params", "0,1,4/45,0"}).code == 1);
}

TEST_CASE("construct emits .3g") {
    auto r = run({"construct", "--wheel", "5,2,2,2,2,2", "--emit", "3g"});
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    auto h = io::read_3g(in);
    CHECK(h.order() == 15);
    CHECK(h.size() == 100);
    auto sym = run({"construct", "--wheel", "x=n/3,y=2n/15", "--n", "15", "--emit", "3g"});
    CHECK(sym.out == r.out);
    auto j = nlohmann::json::parse(run({"construct", "--tightness", "58", "--y", "14,14,14", "--z", "2,2,2"}).out);
    CHECK(j["summary"]["n"] == 58);
}

TEST_CASE("check verdicts and exit codes") {
    auto turan = temp_file("turan.3g", io::to_3g(balanced_turan(7)));
    auto r = run({"check", "--file", turan, "--f5", "--k4shadow", "--3partite"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["f5"]["free"] == true);
    CHECK(j["k4shadow"]["free"] == true);
    CHECK(j["3partite"]["holds"] == true);

    auto f5 = temp_file("f5.3g", "5 3\n0 1 2\n0 1 3\n2 3 4\n");
    auto bad = run({"check", "--file", f5, "--f5"});
    CHECK(bad.code == 1);
    auto wj = nlohmann::json::parse(bad.out)["f5"]["witness"];
    auto wfile = temp_file("f5w.json", wj.dump());
    CHECK(run({"validate", "--file", f5, "--witness", wfile}).code == 0);
    CHECK(run({"validate", "--file", turan, "--witness", wfile}).code == 1);
}

TEST_CASE("usage errors name the offending flag") {
    auto a = run({"lemma", "--name", "nope"});
    CHECK(a.code == 2);
    CHECK(a.err.find("--name") != std::string::npos);
    auto b = run({"construct", "--wheel", "x=n/4,y=n/5", "--n", "15"});
    CHECK(b.code == 2);
    CHECK(b.err.find("--wheel") != std::string::npos);
    auto c = run({"search", "--n", "6", "--mode", "fastest"});
    CHECK(c.code == 2);
    CHECK(c.err.find("--mode") != std::string::npos);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"check", "--file", "/nonexistent.3g"}).code == 2);
    CHECK(run({"lemma", "--name", "opt2", "--d", "13"}).code == 2);
}

TEST_CASE("search output is reproducible") {
    auto a = run({"search", "--n", "6", "--forbid", "k4minus,f5", "--mode", "max-min-degree", "--non-3partite"});
    auto b = run({"--threads", "1", "search", "--n", "6", "--forbid", "k4minus,f5", "--mode", "max-min-degree",
                  "--non-3partite"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["optimum"] == 2);
    CHECK(j["exhaustive"] == true);
    std::istringstream in(j["witness"].get<std::string>());
    CHECK(io::read_3g(in).order() == 6);
}

TEST_CASE("audit") {
    auto r = run({"audit", "--claims"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["pass"] == true);
    auto f = run({"audit", "--fuzz", "200", "--seed", "3"});
    CHECK(f.code == 0);
    CHECK(nlohmann::json::parse(f.out)["counterexamples"].empty());
}

}  // TEST_SUITE
