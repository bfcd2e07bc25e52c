#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

// Path injected by CMake.
#ifndef GRIDIV_CLI
#error "GRIDIV_CLI must point at the gridiv binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    RunResult result;
    std::string cmd = std::string(GRIDIV_CLI) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
        result.output.append(buf.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

TEST_CASE("count single query") {
    auto r = run_cli("count --m 2 --n 5 --k 5 --engine dp");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "831\n");
    CHECK(run_cli("count --m 2 --n 1 --k 1").output == "1\n");
}

TEST_CASE("count over ranges emits csv ordered by (m, n, k)") {
    auto r = run_cli("count --m 2 --n 1..2 --k 1..2 --engine brute");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "m,n,k,count\n2,1,1,1\n2,1,2,1\n2,2,1,1\n2,2,2,6\n");
}

TEST_CASE("engines agree through the cli") {
    for (const char* engine : {"brute", "dp", "recursion", "auto"})
        CHECK(run_cli(std::string("count --m 2 --n 4 --k 3 --engine ") + engine)
                  .output == "107\n");
}

TEST_CASE("table reproduces the recurrence csv") {
    auto r = run_cli("table --m 2 --n 1..4 --k 1..3");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "n,k,count\n"
          "1,1,1\n1,2,1\n1,3,0\n"
          "2,1,1\n2,2,6\n2,3,4\n"
          "3,1,1\n3,2,15\n3,3,29\n"
          "4,1,1\n4,2,28\n4,3,107\n");
    // Deterministic byte-for-byte.
    CHECK(run_cli("table --m 2 --n 1..4 --k 1..3").output == r.output);
}

TEST_CASE("fit emits the exact k=3 coefficients") {
    auto r = run_cli("fit --k 3");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["k"] == 3);
    // d_3 ascending: 1, -13/6, 11/6, -4/3, 2/3
    auto pair = [](const char* num, const char* den) {
        return nlohmann::json::array({num, den});
    };
    CHECK(doc["d"] == nlohmann::json::array({pair("1", "1"), pair("-13", "6"),
                                             pair("11", "6"), pair("-4", "3"),
                                             pair("2", "3")}));
    CHECK(doc["s"][0] == pair("-1", "1"));
}

TEST_CASE("symmetry reports") {
    auto r = run_cli("symmetry --m 2 --n 4 --k 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"orbits\": \"10\"") != std::string::npos);
}

TEST_CASE("enumerate fixture format") {
    auto r = run_cli("enumerate --m 2 --n 1 --k 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "2 1 2\n0,1\n");
}

TEST_CASE("exit codes") {
    CHECK(run_cli("count --m 2 --n 0 --k 1").exit_code == 2);      // input error
    CHECK(run_cli("count --m 10 --n 10 --k 2 --engine brute").exit_code == 4);
    auto guard = run_cli("count --m 10 --n 10 --k 2 --engine brute");
    CHECK(guard.output.find("guard_exceeded") != std::string::npos);
    CHECK(run_cli("count --m 3 --n 3 --k 2 --engine recursion").exit_code == 2);
}

TEST_CASE("edge limit override") {
    // 2x3 has 7 edges; a limit of 4 must refuse, a limit of 7 must work.
    CHECK(run_cli("count --m 2 --n 3 --k 2 --engine brute --edge-limit 4").exit_code == 4);
    CHECK(run_cli("count --m 2 --n 3 --k 2 --engine brute --edge-limit 7").output == "15\n");
}
