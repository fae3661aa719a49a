#include <doctest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

// End-to-end checks against the installed binary; KAPPA_CLI_PATH is injected
// by the build.

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(KAPPA_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/kappa_cli_test_") + name;
}

}  // namespace

TEST_CASE("compute on the built-in nonsmoothable example") {
    auto res = run_cli("compute --example d15-nonsmoothable --json");
    CHECK(res.exit_code == 2);  // obstructed
    auto doc = nlohmann::json::parse(res.out);
    CHECK(doc["kappa"] == nlohmann::json({15, 44, 15}));
    CHECK(doc["verdict"] == "obstructed");
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["betti"]["top"][0] == 15);
}

TEST_CASE("compute accepts a field override") {
    std::string dump = temp_path("jpp.json");
    auto res = run_cli("examples --dump a7-J-doubleprime --out " + dump);
    CHECK(res.exit_code == 0);
    auto res2 = run_cli("compute " + dump + " --field fp:10007 --json");
    CHECK(res2.exit_code == 2);
    auto doc = nlohmann::json::parse(res2.out);
    CHECK(doc["field"] == "fp:10007");
    CHECK(doc["kappa"] == nlohmann::json({6, 18, 6}));
    std::remove(dump.c_str());
}

TEST_CASE("from-points pipeline") {
    std::string csv = temp_path("pts.csv");
    {
        std::ofstream out(csv);
        out << "0,0,0,0,0\n1,0,0,0,0\n0,1,0,0,0\n0,0,1,0,0\n0,0,0,1,0\n0,0,0,0,1\n";
        out << "1,1,1,1,1\n1,1,0,0,0\n0,0,0,1,1\n";
    }
    std::string space = temp_path("space.json");
    auto res = run_cli("from-points " + csv + " --json --out " + space);
    CHECK(res.exit_code == 0);
    auto doc = nlohmann::json::parse(res.out);
    CHECK(doc["report"]["kappa"] == nlohmann::json({5, 12, 5}));
    CHECK(doc["report"]["verdict"] == "unobstructed");

    // the emitted space document recomputes to the same kappa
    auto res2 = run_cli("compute " + space + " --json");
    CHECK(res2.exit_code == 0);
    CHECK(nlohmann::json::parse(res2.out)["kappa"] == nlohmann::json({5, 12, 5}));
    std::remove(csv.c_str());
    std::remove(space.c_str());
}

TEST_CASE("from-points surfaces frame degeneracy with row indices") {
    std::string csv = temp_path("collinear.csv");
    {
        std::ofstream out(csv);
        out << "0,0\n1,0\n2,0\n3,4\n5,9\n";  // frame rows 0-2 collinear, d=2, e=2
    }
    std::string cmd = std::string(KAPPA_CLI_PATH) + " from-points " + csv + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 1);
    CHECK(out.find("rows 0-2") != std::string::npos);
    std::remove(csv.c_str());
}

TEST_CASE("table commands") {
    auto res = run_cli("table dimension --d 4");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("20 (expected 20) PASS") != std::string::npos);

    CHECK(run_cli("table dimension --d 3").exit_code == 1);
    CHECK(run_cli("table dimension --d 9").exit_code == 1);  // needs --large

    auto deform = run_cli("table deform153 --example e3-special-points-5");
    CHECK(deform.exit_code == 0);
    CHECK(deform.out.find("union of 9 distinct points:   yes") != std::string::npos);
}

TEST_CASE("sampling is byte-deterministic and validates the prime") {
    std::string args = "sample --d 4 --e 3 --fp 10007 --trials 25 --seed 7";
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("mode: (4,12,4)") != std::string::npos);

    CHECK(run_cli("sample --d 4 --e 3 --fp 3 --trials 5").exit_code == 1);
    CHECK(run_cli("sample --d 4 --e 3 --fp 10006 --trials 5").exit_code == 1);
}

TEST_CASE("usage errors") {
    CHECK(run_cli("compute").exit_code == 1);          // no input
    CHECK(run_cli("compute /nonexistent.json").exit_code == 1);
    CHECK(run_cli("compute --example unknown-name").exit_code == 1);
    CHECK(run_cli("bogus-subcommand").exit_code != 0);
}
