#include "cli.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

namespace fs = std::filesystem;
using polycert::cli::run;

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = run(args, out, err);
    return {status, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "polycert_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("digest") {
    CHECK(polycert::cli::fnv1a_hex("") == "cbf29ce484222325");
    CHECK(polycert::cli::fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("encode") {
    Outcome k4 = call({"encode", "--graph", "k4", "--encoding", "coloring", "--k", "3"});
    CHECK(k4.status == 0);
    CHECK(contains(k4.out, "generators 10\n"));
    Outcome p = call({"encode", "--graph", "petersen", "--encoding", "stable-set", "--k", "4"});
    CHECK(contains(p.out, "generators 26\n"));
    CHECK(call({"encode", "--graph", "k4", "--encoding", "sudoku", "--k", "3"}).status == 2);
    CHECK(call({"encode", "--graph", "nosuchgraph", "--encoding", "coloring", "--k", "3"}).status == 2);
    CHECK(call({"frobnicate"}).status == 2);
}

TEST_CASE("certify and verify") {
    const fs::path cert = scratch("k4.json"), report = scratch("k4_report.json");
    Outcome k4 = call({"--report", report.string(), "certify", "--graph", "k4", "--encoding", "coloring", "--k", "3",
                       "--out", cert.string()});
    CHECK(k4.status == 0);
    CHECK(contains(k4.out, "deg 1 row 51 col 50"));
    CHECK(contains(k4.out, "certificate degree 4"));
    auto r = nlohmann::json::parse(slurp(report));
    CHECK(r["exit_status"] == 0);
    CHECK(r["result"]["degree"] == 4);
    CHECK(r["result"]["attempts"].size() == 5);
    CHECK(r["input_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
    CHECK(r["outputs"][0] == cert.string());

    CHECK(call({"verify", "--cert", cert.string()}).status == 0);
    std::string text = slurp(cert);
    const fs::path truncated = scratch("truncated.json");
    spit(truncated, text.substr(0, text.size() / 2));
    CHECK(call({"verify", "--cert", truncated.string()}).status == 2);
    auto doc = nlohmann::json::parse(text);
    doc["coefficients"][0] = "x_1^3";
    const fs::path edited = scratch("edited.json");
    spit(edited, doc.dump(2));
    Outcome bad = call({"verify", "--cert", edited.string()});
    CHECK(bad.status == 1);
    CHECK(bad.out == "FAIL\n");

    Outcome t = call({"certify", "--graph", "turan5_3", "--encoding", "stable-refute", "--r", "1"});
    CHECK(t.status == 0);
    CHECK(contains(t.out, "certificate degree 2"));
    Outcome k3 = call({"certify", "--graph", "k3", "--encoding", "coloring", "--k", "3", "--max-degree", "2"});
    CHECK(k3.status == 1);
    CHECK(contains(k3.out, "no certificate up to degree 2"));
}

TEST_CASE("randomized runs need a seed") {
    CHECK(call({"certify", "--graph", "k4", "--encoding", "coloring", "--k", "3", "--keep-prob", "0.5"}).status == 2);
    const fs::path report = scratch("trials.json");
    Outcome t = call({"--report", report.string(), "certify", "--graph", "k4", "--encoding", "coloring", "--k", "3",
                      "--keep-prob", "1", "--trials", "2", "--seed", "5"});
    CHECK(t.status == 0);
    CHECK(contains(t.out, "successes 2"));
    CHECK(nlohmann::json::parse(slurp(report))["seed"] == 5);
}

TEST_CASE("system files round-trip through the tool") {
    const fs::path sys = scratch("c5.sys");
    CHECK(call({"encode", "--graph", "c5", "--encoding", "coloring", "--k", "2", "--out", sys.string()}).status == 0);
    Outcome c = call({"certify", "--system", sys.string(), "--max-degree", "2"});
    CHECK(c.status == 0);
    Outcome o = call({"oracle", "--system", sys.string()});
    CHECK(contains(o.out, "infeasible"));
}

TEST_CASE("stable dual sigma oracle") {
    const fs::path cert = scratch("petersen_stable.json");
    Outcome s = call({"stable", "--graph", "petersen", "--r", "1", "--out", cert.string()});
    CHECK(s.status == 0);
    CHECK(contains(s.out, "degree 4\nverified yes"));
    CHECK(call({"verify", "--cert", cert.string()}).status == 0);
    CHECK(call({"stable", "--graph", "petersen", "--r", "1", "--reduced"}).status == 0);

    Outcome d = call({"dual", "--graph", "diamond", "--d", "3"});
    CHECK(contains(d.out, "terms 18\n"));
    CHECK(contains(d.out, "dual 0 0 2 0 eps* 1"));

    Outcome sg = call({"sigma", "--graph", "c6"});
    CHECK(sg.status == 0);
    CHECK(contains(sg.out, "sigma 3\n"));
    CHECK(call({"sigma", "--graph", "petersen", "--budget", "100"}).status == 3);

    Outcome o = call({"oracle", "--graph", "k4", "--encoding", "coloring", "--k", "3"});
    CHECK(o.status == 0);
    CHECK(contains(o.out, "infeasible\n"));
    Outcome h = call({"oracle", "--graph", "k4", "--encoding", "hamiltonian", "--count", "--serial"});
    CHECK(contains(h.out, "count 24\n"));
    CHECK(call({"oracle", "--graph", "petersen", "--encoding", "hamiltonian", "--budget", "10"}).status == 3);
    CHECK(call({"--threads", "2", "oracle", "--graph", "k3", "--encoding", "coloring", "--k", "3"}).status == 0);
}
