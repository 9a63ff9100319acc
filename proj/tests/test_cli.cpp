#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ctf/cli.hpp"
#include "ctf/graph_io.hpp"
#include "ctf/verifier.hpp"

using namespace ctf;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kP8 = CTF_DATA_DIR "/p8.g";

std::string write_temp(const std::string& name, const std::string& text) {
    std::ofstream(name) << text;
    return name;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

} // namespace

TEST_CASE("example reproduces the worked example") {
    const auto r = run({"example"});
    CHECK(r.code == 0);
    CHECK(r.out.find("T = y^3+x^2+2*x*y+2*y^2+x+y\n") != std::string::npos);
    CHECK(r.out.find("kappa = y^3+x^2+2*x*y-5*y^2-5*x+6*y\n") != std::string::npos);
    CHECK(r.out.find("kappa_bar = y^3+x^2+2*x*y+5*y^2+5*x+10*y+8\n") != std::string::npos);
    CHECK(r.out.find("kappa_Z = 14/3*y^3+3*x^2+8*x*y-23*y^2-17*x+85/3*y-4\n") != std::string::npos);
    CHECK(r.out.find("kappa_bar_Z = ") != std::string::npos);
    CHECK(r.out.find("orientations: 32\n") != std::string::npos);
    CHECK(r.out.find("cut-Eulerian classes: 8\n") != std::string::npos);
    CHECK(r.out.find("kappa(2,2) = 2, |O_ce| = 8, #[O_ce] = 2") != std::string::npos);
    CHECK(r.out.find("states kappa(2,2) = #[O_ce] = 0") != std::string::npos);
    CHECK(r.out.find("2y-1 read as 2q-1 matches the brute-force polynomial") != std::string::npos);
    CHECK(run({"example"}).out == r.out);

    const auto j = nlohmann::json::parse(run({"example", "--format", "json"}).out);
    CHECK(j["census"]["orientations"] == 32);
    CHECK(j["anomalies"][0]["kappa_2_2"] == "2");
    CHECK(j["anomalies"][1]["kappa_int_formula_matches"] == true);
}

TEST_CASE("count") {
    CHECK(run({"count", kP8, "--family", "kappa_mod", "--p", "3", "--q", "3"}).out == "12\n");
    CHECK(run({"count", kP8, "--family", "kappa_int", "--p", "2", "--q", "2"}).out == "8\n");
    CHECK(run({"count", kP8, "--family", "kappa_local", "--p", "3", "--q", "2", "--orientation", "00000"}).code == 0);
    for (int q = 1; q <= 4; ++q) {
        const auto qs = std::to_string(q);
        CHECK(run({"count", kP8, "--family", "kappa_mod", "--p", "4", "--q", qs, "--group-p", "2,2"}).out ==
              run({"count", kP8, "--family", "kappa_mod", "--p", "4", "--q", qs}).out);
    }
    const auto j = nlohmann::json::parse(run({"--format", "json", "count", kP8, "--family", "tau_mod", "--p", "3"}).out);
    CHECK(j["count"] == 2);
}

TEST_CASE("classes") {
    const auto r = run({"classes", kP8, "--relation", "cut-eulerian"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "8 classes");
    CHECK(first_line(run({"classes", kP8, "--relation", "cut", "--filter", "acyclic"}).out) == "2 classes");
    CHECK(first_line(run({"classes", kP8, "--relation", "eulerian", "--filter", "totally-cyclic"}).out) ==
          "4 classes");
    const auto j = nlohmann::json::parse(run({"classes", kP8, "--relation", "eulerian", "--format", "json"}).out);
    CHECK(j["count"] == 14);
    CHECK(j["classes"][0]["representative"] == "00000");
}

TEST_CASE("polys") {
    const auto r = run({"polys", kP8});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "T = y^3+x^2+2*x*y+2*y^2+x+y");
    const auto j = nlohmann::json::parse(run({"polys", kP8, "--format", "json"}).out);
    CHECK(polynomial_from_json(j["kappa_bar_mod"]) == polynomial_from_json(j["rank_generating"]));
}

TEST_CASE("verify exit codes") {
    const auto ok = run({"verify", kP8});
    CHECK(ok.code == cli::kExitOk);
    CHECK(ok.out.find("note  kappa(2,2) = 2") != std::string::npos);
    const auto failing = run({"verify", kP8, "--fail-identity", "RPQ"});
    CHECK(failing.code == cli::kExitVerificationFailed);
    CHECK(failing.out.find("FAIL  RPQ") != std::string::npos);
    CHECK(run({"verify", kP8, "--fail-identity", "XYZ"}).code == cli::kExitError);
    CHECK(run({"verify", kP8, "--budget", "2"}).code == cli::kExitVerificationFailed);
    const auto j = nlohmann::json::parse(run({"verify", kP8, "--format", "json"}).out);
    CHECK(j["all_passed"] == true);
}

TEST_CASE("corpus") {
    const auto r = run({"corpus", "--max-edges", "2", "--loops"});
    CHECK(r.code == 0);
    CHECK(r.out.find(std::to_string(corpus_graphs(2, true).size()) + " graphs, 0 failing") != std::string::npos);
    CHECK(run({"corpus", "--max-edges", "1", "--fail-identity", "TC"}).code == cli::kExitVerificationFailed);
    CHECK(run({"corpus", "--max-edges", "9"}).code == cli::kExitError);
}

TEST_CASE("operational errors") {
    CHECK(run({}).code == cli::kExitError);
    CHECK(run({"frobnicate"}).code == cli::kExitError);
    CHECK(run({"polys", "/nonexistent.g"}).code == cli::kExitError);
    CHECK(run({"count", kP8, "--family", "nope"}).code == cli::kExitError);
    CHECK(run({"count", kP8, "--family", "kappa_mod", "--p", "0"}).code == cli::kExitError);
    CHECK(run({"count", kP8, "--family", "kappa_mod", "--p", "3", "--group", "2,2"}).code == cli::kExitError);
    CHECK(run({"count", kP8, "--family", "kappa_int", "--p", "9", "--q", "9", "--budget", "5"}).code ==
          cli::kExitError);
    CHECK(run({"classes", kP8, "--relation", "bogus"}).code == cli::kExitError);
    CHECK(run({"polys", kP8, "--format", "xml"}).code == cli::kExitError);

    const auto bad = write_temp("cli_bad.g", "v 2\ne 0 5\n");
    const auto r = run({"polys", bad});
    CHECK(r.code == cli::kExitError);
    CHECK(r.err.find("line 2") != std::string::npos);

    std::string big = "v 2\n";
    for (int i = 0; i < 13; ++i) big += "e 0 1\n";
    const auto thirteen = write_temp("cli_thirteen.g", big);
    CHECK(run({"polys", thirteen}).code == cli::kExitError);
    CHECK(run({"verify", thirteen}).code == cli::kExitError);
    CHECK(run({"count", thirteen, "--family", "kappa_mod", "--p", "2", "--q", "2"}).out == "1\n");
    std::remove(bad.c_str());
    std::remove(thirteen.c_str());
}

TEST_CASE("budget lifts the size guard") {
    std::string big = "v 2\n";
    for (int i = 0; i < 22; ++i) big += "e 0 1\n";
    const auto bond = write_temp("cli_bond.g", big);
    const std::vector<std::string> args{"count", bond, "--family", "phi_mod", "--q", "2"};
    CHECK(run(args).code == cli::kExitError);
    auto lifted = args;
    lifted.insert(lifted.end(), {"--budget", "10000000"});
    const auto r = run(lifted);
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
    std::remove(bond.c_str());
}

TEST_CASE("help") { CHECK(run({"--help"}).code == cli::kExitOk); }
