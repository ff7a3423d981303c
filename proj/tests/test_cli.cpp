#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "treepack/generators.hpp"
#include "treepack/graph_io.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;

    Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    Run r;
    r.code = treepack::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string without_timing(const std::string& report)
{
    auto j = Json::parse(report);
    j.erase("timing");
    return j.dump();
}

std::string temp_file(const std::string& name, const std::string& content)
{
    const auto path = std::filesystem::temp_directory_path() / ("treepack_cli_test_" + name);
    std::ofstream(path, std::ios::binary) << content;
    return path.string();
}

}  // namespace

TEST_CASE("report envelope")
{
    const auto r = run({"tau", "--fixture", "petersen"});
    REQUIRE(r.code == 0);
    const auto j = r.json();
    CHECK(j["command"] == "tau");
    CHECK(j["version"] == TREEPACK_VERSION);
    CHECK(j["seed"] == 0);
    CHECK(j["inputs"]["fixture"] == "petersen");
    CHECK(j["results"]["tau"] == 1);
    CHECK(j["results"]["verified"] == true);
    CHECK(j["timing"].contains("elapsed_ms"));
    CHECK(run({"tau", "--fixture", "k5", "--seed", "9"}).json()["seed"] == 9);
}

TEST_CASE("fixtures")
{
    CHECK(treepack::cli::fixture_by_name("k7").size() == 21);
    CHECK(treepack::cli::fixture_by_name("k3x4").size() == 12);
    CHECK(treepack::cli::fixture_by_name("b11,5,1").edges() == treepack::build_B(11, 5, 1).edges());
    CHECK(treepack::cli::fixture_by_name("h2").size() == 261);
    CHECK(run({"tau", "--fixture", "nope"}).code == 2);
    CHECK(run({"tau", "--fixture", "b5,3,3"}).code == 2);
    CHECK(run({"tau", "--fixture", "k99999999999"}).code == 2);
}

TEST_CASE("exit codes")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"tau"}).code == 2);
    CHECK(run({"check-p", "--fixture", "k4"}).code == 2);
    CHECK(run({"tau", "--fixture", "k4", "--format", "xml"}).code == 2);
    CHECK(run({"tau", "/nonexistent/graph.txt"}).code == 3);
    CHECK(run({"tau", temp_file("bad.txt", "3 2\n0 1\n")}).code == 3);
    CHECK(run({"tau", temp_file("loop.txt", "3 1\n1 1\n")}).code == 3);
    CHECK(run({"eigen", "--fixture", "k4", "--alpha", "1.5"}).code == 3);
    CHECK(run({"validate", "--config", temp_file("cfg_bad.json", "{\"samples\": \"x\"}")}).code == 3);
    CHECK(run({"validate", "--config", temp_file("cfg_unknown.json", "{\"colour\": 1}")}).code == 3);
    CHECK(run({"validate", "--config", temp_file("cfg_broken.json", "{")}).code == 3);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("graph files and fixtures agree")
{
    const auto path = temp_file("h1.txt", treepack::format_edge_list(treepack::fixture_H1()));
    auto a = run({"eigen", path, "--i", "1"}).json()["results"];
    auto b = run({"eigen", "--fixture", "h1", "--i", "1"}).json()["results"];
    CHECK(a == b);
    CHECK(std::abs(a["lambda"].get<double>() - 5.1919) < 5e-5);
    CHECK(run({"export", "--fixture", "h1"}).out == treepack::format_edge_list(treepack::fixture_H1()));
}

TEST_CASE("commands")
{
    const auto eig = run({"eigen", "--fixture", "petersen"}).json()["results"];
    CHECK(eig["values"].size() == 10);
    CHECK(eig["matrix"] == "adjacency");
    CHECK(run({"eigen", "--fixture", "k2", "--alpha", "0.5"}).json()["results"]["matrix"] == "a_alpha");

    const auto nuf = run({"nuf", "--fixture", "petersen"}).json()["results"];
    CHECK(nuf["mode"] == "exact");
    CHECK(nuf["value"]["exact"] == "5/3");
    const auto bounds = run({"nuf", "--fixture", "h2"}).json()["results"];
    CHECK(bounds["mode"] == "bounds");
    CHECK(bounds["upper"]["exact"] == "7");

    const auto h2 = run({"check-p", "--fixture", "h2", "--k", "7", "--d", "15"}).json()["results"];
    CHECK(h2["status"] == "refuted");
    CHECK(h2["stage"] == "bipartition_budget");
    CHECK(h2["evidence"]["refutation"]["numbers"]["bound"] == 29);

    std::string side;
    for (int v = 0; v < 16; ++v)
        side += std::to_string(v) + "\n";
    const auto with_side = run({"check-p", "--fixture", "h2", "--k", "7", "--d", "15", "--bipartition",
                                temp_file("side.txt", side)});
    CHECK(with_side.json()["results"]["status"] == "refuted");

    // H1 has P(2,4): the drawn split fails, another one succeeds.
    const auto h1 = run({"check-p", "--fixture", "h1", "--k", "2", "--d", "4"}).json()["results"];
    CHECK(h1["status"] == "certified");

    const auto t = run({"theorem", "--fixture", "b25,11,2", "--which", "t16", "--k", "3"});
    CHECK(t.code == 0);
    CHECK(t.json()["results"]["conclusion_status"] == "extremal B branch");
    CHECK(run({"theorem", "--fixture", "k10", "--which", "t41", "--k", "3", "--alpha", "0.5"}).code == 0);
}

TEST_CASE("reproduce reports its two mismatching rows")
{
    const auto r = run({"reproduce"});
    CHECK(r.code == 1);
    const auto j = r.json()["results"];
    CHECK(j["all_match"] == false);
    int mismatches = 0;
    for (const auto& row : j["rows"])
        mismatches += !row["match"].get<bool>();
    CHECK(mismatches == 2);
}

TEST_CASE("text and csv renderings")
{
    const auto text = run({"reproduce", "--format", "text"}).out;
    CHECK(text.find("lambda1(H1)") != std::string::npos);
    CHECK(text.find("all_match: false") != std::string::npos);
    const auto csv = run({"reproduce", "--format", "csv"}).out;
    CHECK(csv.rfind("name,expected,computed,match,detail\n", 0) == 0);
    CHECK(csv.find("\"refuted (bipartition_budget, bound 29)\"") != std::string::npos);
    const auto tau = run({"tau", "--fixture", "k5", "--format", "csv"}).out;
    CHECK(tau.find("tau,2\n") != std::string::npos);
}

TEST_CASE("determinism across runs and worker counts")
{
    const auto cfg = temp_file("cfg.json", R"({"samples": 3, "seed": 5})");
    const auto a = run({"validate", "--config", cfg, "--threads", "1"});
    const auto b = run({"validate", "--config", cfg, "--threads", "4"});
    const auto c = run({"validate", "--config", cfg, "--threads", "4"});
    CHECK(a.code == 0);
    CHECK(without_timing(a.out) == without_timing(b.out));
    CHECK(without_timing(b.out) == without_timing(c.out));
    CHECK(a.json()["seed"] == 5);

    for (const auto& args : std::vector<std::vector<std::string>>{
             {"nuf", "--fixture", "h2", "--seed", "3"}, {"check-p", "--fixture", "h1", "--k", "2", "--d", "4"}}) {
        CHECK(without_timing(run(args).out) == without_timing(run(args).out));
    }
    CHECK(run({"tau", "--fixture", "h1", "--format", "text"}).out ==
          run({"tau", "--fixture", "h1", "--format", "text"}).out);
}
