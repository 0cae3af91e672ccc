#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "arboreq/io.hpp"

namespace {

namespace fs = std::filesystem;

fs::path workdir() {
    fs::path dir = fs::temp_directory_path() / "arboreq-cli-tests";
    fs::create_directories(dir);
    return dir;
}

int run(const std::string& args) {
    std::string cmd = std::string(ARBOREQ_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string run_capture(const std::string& args) {
    fs::path out = workdir() / "stdout.txt";
    std::string cmd =
        std::string(ARBOREQ_CLI_PATH) + " " + args + " >" + out.string() + " 2>/dev/null";
    std::system(cmd.c_str());
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("gen, solve, verify round trip") {
    fs::path dir = workdir();
    fs::path graph = dir / "pp.json";
    fs::path cert = dir / "cert.json";
    CHECK(run("gen --family path-power --n 20 --p 2 --out " + graph.string()) == 0);
    CHECK(run("solve --graph " + graph.string() + " --k 2 --random --seed 7 --out " +
              cert.string()) == 0);
    CHECK(run("verify --graph " + graph.string() + " --coloring " + cert.string()) == 0);

    // identical seed, identical bytes
    fs::path cert2 = dir / "cert2.json";
    CHECK(run("solve --graph " + graph.string() + " --k 2 --random --seed 7 --out " +
              cert2.string()) == 0);
    std::ifstream a(cert), b(cert2);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
}

TEST_CASE("tampered certificates fail verification with exit 1") {
    fs::path dir = workdir();
    fs::path graph = dir / "k22.json";
    CHECK(run("gen --family complete-bipartite --a 2 --b 2 --out " + graph.string()) == 0);
    // monochrome C_4
    nlohmann::json bad = {{"colors", {{"0", 1}, {"1", 1}, {"2", 1}, {"3", 1}}}};
    fs::path badfile = dir / "bad.json";
    arboreq::save_json_file(badfile.string(), bad);
    fs::path lists = dir / "lists.json";
    nlohmann::json lj = {{"lists",
                          {{"0", {1, 2}}, {"1", {1, 2}}, {"2", {1, 2}}, {"3", {1, 2}}}}};
    arboreq::save_json_file(lists.string(), lj);
    CHECK(run("verify --graph " + graph.string() + " --lists " + lists.string() +
              " --coloring " + badfile.string() + " --k 2") == 1);
}

TEST_CASE("precondition failures exit 2") {
    CHECK(run("gen --family cycle-power --n 2 --p 1 --out /dev/null") == 2);
    CHECK(run("gen --family nosuch --out /dev/null") == 2);
}

TEST_CASE("decide exit codes cover all verdicts") {
    fs::path dir = workdir();
    fs::path k5 = dir / "k5.json";
    fs::path k5e = dir / "k5e.json";
    fs::path lists = dir / "l2.json";
    CHECK(run("gen --family complete --n 5 --out " + k5.string()) == 0);
    CHECK(run("gen --family complete-minus-edge --n 5 --out " + k5e.string()) == 0);
    nlohmann::json lj = nlohmann::json::object();
    for (int v = 0; v < 5; ++v) lj["lists"][std::to_string(v)] = {0, 1};
    arboreq::save_json_file(lists.string(), lj);

    CHECK(run("decide --graph " + k5e.string() + " --lists " + lists.string() +
              " --k 2 --cap 3") == 0);
    CHECK(run("decide --graph " + k5.string() + " --lists " + lists.string() +
              " --k 2 --cap 3") == 1);
    fs::path k66 = dir / "k66.json";
    CHECK(run("gen --family complete-bipartite --a 6 --b 6 --out " + k66.string()) == 0);
    CHECK(run("decide --graph " + k66.string() +
              " --all-assignments --k 2 --universe 6 --budget 0.01s") == 3);
}

TEST_CASE("reproduce prints the non-monotonicity pair") {
    std::string table = run_capture("reproduce --subset thm2.7 --budget 60s");
    CHECK(table.find("Feasible@k=3") != std::string::npos);
    CHECK(table.find("Infeasible@k=4") != std::string::npos);
    CHECK(table.find("FAIL") == std::string::npos);
}

TEST_CASE("export-dot emits graphviz") {
    fs::path dir = workdir();
    fs::path graph = dir / "c5.json";
    CHECK(run("gen --family cycle-power --n 5 --p 1 --out " + graph.string()) == 0);
    std::string dot = run_capture("export-dot --graph " + graph.string());
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("4;") != std::string::npos);
}
