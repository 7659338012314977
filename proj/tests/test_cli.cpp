#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

// SICQ_CLI_PATH is injected by the build; every case shells out to the real
// binary, so these tests cover argument parsing, exit codes, and file IO.

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SICQ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path tmp_dir() {
    static const fs::path dir = [] {
        fs::path p = fs::temp_directory_path() /
                     ("sicq_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

std::string write_text(const std::string& name, const std::string& content) {
    const fs::path p = tmp_dir() / name;
    std::ofstream f(p);
    f << content;
    f.close();
    return p.string();
}

// Shared d = 2 fiducial file produced once by the search command.
std::string fiducial_d2_path() {
    static const std::string path = [] {
        const std::string p = (tmp_dir() / "fid_d2.json").string();
        const RunResult r = run_cli("search --d 2 --seed 1 --out " + p);
        REQUIRE(r.exit_code == 0);
        return p;
    }();
    return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("search converges, writes a verifiable fiducial file, and echoes its config") {
    const std::string fid = fiducial_d2_path();
    const RunResult r = run_cli("search --d 2 --seed 1 --out " + fid);
    CHECK(r.exit_code == 0);
    const json rep = json::parse(r.out);
    CHECK(rep["version"].is_string());
    CHECK(rep["config"]["command"] == "search");
    CHECK(rep["config"]["d"] == 2);
    CHECK(rep["config"]["seed"] == 1);
    CHECK(rep["config"]["max_restarts"] == 50);
    CHECK(rep["result"]["converged"] == true);
    CHECK(rep["result"]["objective"].get<double>() <= 1e-16);
    CHECK(rep["result"]["residual"].get<double>() < 1e-10);

    const json file = json::parse(std::ifstream(fid));
    CHECK(file["d"] == 2);
    CHECK(file["fiducial"].size() == 2);
    CHECK(file["tau_convention"] == "-exp(i*pi/d)");
    CHECK(file["residual"].get<double>() < 1e-10);

    const RunResult v = run_cli("verify --in " + fid);
    CHECK(v.exit_code == 0);
    const json vrep = json::parse(v.out);
    CHECK(vrep["result"]["pass"] == true);
    CHECK(vrep["result"]["residual"].get<double>() < 1e-10);
    CHECK(vrep["result"]["gram_min_singular"].get<double>() > 1e-8);
}

TEST_CASE("identical invocations produce byte-identical output") {
    const RunResult a = run_cli("search --d 2 --seed 42");
    const RunResult b = run_cli("search --d 2 --seed 42");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    const RunResult c = run_cli("search --d 2 --seed 43");
    CHECK(a.out != c.out);
}

TEST_CASE("usage errors and budget exhaustion have distinct exit codes") {
    CHECK(run_cli("search --d 1 --seed 1").exit_code == 1);    // below range
    CHECK(run_cli("search --d 17 --seed 1").exit_code == 1);   // above range
    CHECK(run_cli("search").exit_code == 1);                   // missing --d
    CHECK(run_cli("nonsense").exit_code == 1);                 // unknown command
    CHECK(run_cli("").exit_code == 1);                         // no command
    const RunResult r = run_cli("search --d 3 --seed 1 --max-restarts 0");
    CHECK(r.exit_code == 2);
    const json rep = json::parse(r.out);
    CHECK(rep["result"]["converged"] == false);
    CHECK(rep["result"]["residual"].is_null());
}

TEST_CASE("verify distinguishes malformed input from verification failure") {
    const std::string trunc = write_text("trunc.json", "{\"d\": 2, \"fiducial\": [[0.1");
    CHECK(run_cli("verify --in " + trunc).exit_code == 1);
    CHECK(run_cli("verify --in " + (tmp_dir() / "absent.json").string()).exit_code == 1);

    json good = json::parse(std::ifstream(fiducial_d2_path()));
    good["fiducial"][0][0] = good["fiducial"][0][0].get<double>() + 1e-3;
    const std::string bad = write_text("fid_bad.json", good.dump());
    const RunResult r = run_cli("verify --in " + bad);
    CHECK(r.exit_code == 3);
    const json rep = json::parse(r.out);
    CHECK(rep["result"]["pass"] == false);
    CHECK(rep["result"]["equiangular"] == false);
    CHECK(rep["result"]["residual"].get<double>() > 1e-6);
    CHECK(rep["result"]["worst_i"] != rep["result"]["worst_j"]);
}

TEST_CASE("rejected tau conventions and wrong-size fiducials are input errors") {
    json f = json::parse(std::ifstream(fiducial_d2_path()));
    f["tau_convention"] = "+exp(i*pi/d)";
    CHECK(run_cli("verify --in " + write_text("fid_conv.json", f.dump())).exit_code == 1);

    json g = json::parse(std::ifstream(fiducial_d2_path()));
    g["fiducial"] = json::array({g["fiducial"][0]});
    CHECK(run_cli("verify --in " + write_text("fid_short.json", g.dump())).exit_code == 1);
}

TEST_CASE("convert maps the maximally mixed state to uniform probabilities") {
    const std::string state = write_text(
        "mixed.json",
        R"({"d": 2, "rho": [[[0.5, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.5, 0.0]]]})");
    const std::string probs_path = (tmp_dir() / "mixed_probs.json").string();
    const RunResult r = run_cli("convert --fiducial " + fiducial_d2_path() + " --in " + state +
                                " --direction to-probs --out " + probs_path);
    CHECK(r.exit_code == 0);
    const json rep = json::parse(r.out);
    for (const auto& p : rep["result"]["probs"]) {
        CHECK(p.get<double>() == doctest::Approx(0.25).epsilon(1e-12));
    }
    CHECK(rep["result"]["purity"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));

    const json file = json::parse(std::ifstream(probs_path));
    CHECK(file["d"] == 2);
    CHECK(file["probs"].size() == 4);
}

TEST_CASE("convert round trip reproduces the state") {
    const std::string state = write_text(
        "state.json",
        R"({"d": 2, "rho": [[[0.7, 0.0], [0.21, -0.35]], [[0.21, 0.35], [0.3, 0.0]]]})");
    const std::string probs_path = (tmp_dir() / "probs_rt.json").string();
    REQUIRE(run_cli("convert --fiducial " + fiducial_d2_path() + " --in " + state +
                    " --direction to-probs --out " + probs_path)
                .exit_code == 0);
    const RunResult r = run_cli("convert --fiducial " + fiducial_d2_path() + " --in " +
                                probs_path + " --direction from-probs");
    CHECK(r.exit_code == 0);
    const json rep = json::parse(r.out);
    CHECK(rep["result"]["valid"] == true);
    CHECK(rep["result"]["min_eigenvalue"].get<double>() > 0.0);
    const json original = json::parse(std::ifstream(state));
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            for (std::size_t c = 0; c < 2; ++c) {
                const double got = rep["result"]["rho"][a][b][c].get<double>();
                const double want = original["rho"][a][b][c].get<double>();
                CHECK(std::abs(got - want) < 1e-12);
            }
        }
    }
}

TEST_CASE("convert rejects invalid distributions with exit 3 and mismatches with exit 1") {
    const std::string point =
        write_text("point.json", R"({"d": 2, "probs": [1.0, 0.0, 0.0, 0.0]})");
    const RunResult r = run_cli("convert --fiducial " + fiducial_d2_path() + " --in " + point +
                                " --direction from-probs");
    CHECK(r.exit_code == 3);
    const json rep = json::parse(r.out);
    CHECK(rep["result"]["valid"] == false);
    CHECK(rep["result"]["min_eigenvalue"].get<double>() < 0.0);
    CHECK(rep["result"]["rho"].is_null());

    const std::string d3state = write_text(
        "d3.json",
        R"({"d": 3, "rho": [[[0.4,0],[0,0],[0,0]],[[0,0],[0.3,0],[0,0]],[[0,0],[0,0],[0.3,0]]]})");
    CHECK(run_cli("convert --fiducial " + fiducial_d2_path() + " --in " + d3state +
                  " --direction to-probs")
              .exit_code == 1);
}

TEST_CASE("--normalize rescales from-probs input and is rejected for to-probs") {
    const std::string scaled =
        write_text("scaled.json", R"({"d": 2, "probs": [0.5, 0.5, 0.5, 0.5]})");
    const RunResult bare = run_cli("convert --fiducial " + fiducial_d2_path() + " --in " +
                                   scaled + " --direction from-probs");
    CHECK(bare.exit_code == 1);  // sums to 2, off the simplex
    const RunResult norm = run_cli("convert --fiducial " + fiducial_d2_path() + " --in " +
                                   scaled + " --direction from-probs --normalize");
    CHECK(norm.exit_code == 0);
    const json rep = json::parse(norm.out);
    CHECK(rep["result"]["valid"] == true);
    CHECK(rep["config"]["normalize"] == true);

    const std::string state = write_text(
        "mixed2.json",
        R"({"d": 2, "rho": [[[0.5, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.5, 0.0]]]})");
    CHECK(run_cli("convert --fiducial " + fiducial_d2_path() + " --in " + state +
                  " --direction to-probs --normalize")
              .exit_code == 1);
}

TEST_CASE("urgleichung reports Born agreement and the json/csv views carry the same numbers") {
    const std::string state = write_text(
        "urg_state.json",
        R"({"d": 2, "rho": [[[0.7, 0.0], [0.21, -0.35]], [[0.21, 0.35], [0.3, 0.0]]]})");
    const std::string base = "urgleichung --fiducial " + fiducial_d2_path() + " --state " +
                             state + " --basis-seed 7";
    const RunResult j = run_cli(base);
    CHECK(j.exit_code == 0);
    const json rep = json::parse(j.out);
    CHECK(rep["result"]["max_born_error"].get<double>() < 1e-10);
    CHECK(rep["result"]["max_abs_gap"].get<double>() > 0.0);
    CHECK(rep["result"]["pass"] == true);

    const RunResult c = run_cli(base + " --format csv");
    CHECK(c.exit_code == 0);
    // Row j of the table: j,q,p_classical,born. Compare against the JSON run.
    std::istringstream lines(c.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "j,q,p_classical,born");
    for (std::size_t row = 0; row < 2; ++row) {
        REQUIRE(std::getline(lines, line));
        std::istringstream cells(line);
        std::string cell;
        std::getline(cells, cell, ',');
        CHECK(cell == std::to_string(row));
        std::getline(cells, cell, ',');
        CHECK(std::stod(cell) == rep["result"]["q"][row].get<double>());
        std::getline(cells, cell, ',');
        CHECK(std::stod(cell) == rep["result"]["p_classical"][row].get<double>());
        std::getline(cells, cell, ',');
        CHECK(std::stod(cell) == rep["result"]["born_direct"][row].get<double>());
    }
}

TEST_CASE("urgleichung on the maximally mixed state has zero gap") {
    const std::string state = write_text(
        "mixed3.json",
        R"({"d": 2, "rho": [[[0.5, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.5, 0.0]]]})");
    const RunResult r = run_cli("urgleichung --fiducial " + fiducial_d2_path() + " --state " +
                                state + " --basis-seed 3");
    CHECK(r.exit_code == 0);
    const json rep = json::parse(r.out);
    CHECK(rep["result"]["max_abs_gap"].get<double>() < 1e-12);
    for (const auto& q : rep["result"]["q"]) {
        CHECK(q.get<double>() == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("definetti checks the demo mixture and enforces the cap") {
    const std::string mix = write_text(
        "mix.json",
        R"({"d": 2, "weights": [0.6, 0.4], "components": [)"
        R"([[[1.0,0.0],[0.0,0.0]],[[0.0,0.0],[0.0,0.0]]],)"
        R"([[[0.5,0.0],[0.0,0.0]],[[0.0,0.0],[0.5,0.0]]]]})");
    const RunResult r = run_cli("definetti --mixture " + mix + " --n 3 --seed 5 --trials 5000");
    CHECK(r.exit_code == 0);
    const json rep = json::parse(r.out);
    CHECK(rep["result"]["max_asymmetry"].get<double>() < 1e-12);
    CHECK(rep["result"]["max_inconsistency"].get<double>() < 1e-12);
    CHECK(rep["result"]["as_if"]["n_used"] == 3);
    CHECK(rep["result"]["as_if"]["exact_law_max_abs_diff"].get<double>() < 1e-12);
    CHECK(rep["config"]["fiducial"].is_null());

    const RunResult capped =
        run_cli("definetti --mixture " + mix + " --n 12 --seed 5 --trials 100");
    CHECK(capped.exit_code == 1);

    const RunResult with_fid = run_cli("definetti --mixture " + mix +
                                       " --n 2 --seed 5 --trials 5000 --fiducial " +
                                       fiducial_d2_path());
    CHECK(with_fid.exit_code == 0);
    const json rep2 = json::parse(with_fid.out);
    CHECK(rep2["config"]["fiducial"].is_string());
    CHECK(rep2["result"]["as_if"]["exact_law_max_abs_diff"].get<double>() < 1e-12);
}

}  // TEST_SUITE
